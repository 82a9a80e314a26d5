from .core import GridSpec1D
from .core import GridSpec2D
from .core import SampledField1D
from .core import SampledField2D
from .exceptions import GridError
from .exceptions import InvariantViolation
from .exceptions import PerturbativeRegimeWarning
from .exceptions import PsInfoError
from .oscillator import Coupling
from .oscillator import OscillatorSpec
from .oscillator import Space
from .oscillator import oscillator_state
from .phasespace import FieldKind
from .phasespace import husimi_from_wigner
from .phasespace import marginals
from .phasespace import wigner
from .report import compute_all
from .report import sweep
from .version import __version__
