from .constants import Coupling
from .constants import Space
from .objects import BasisExpansion
from .objects import OscillatorSpec
from .objects import Wavefunction
from .states import aho_wavefunction
from .states import first_order_expansion
from .states import fourier_transform
from .states import hermite
from .states import ho_eigenstate
from .states import oscillator_state
from .states import perturbed_state_general
