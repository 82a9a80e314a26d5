from .objects import FieldKind
from .objects import MarginalPair
from .objects import PhaseSpaceField
from .phasespace import expectation
from .phasespace import husimi_from_wigner
from .phasespace import marginals
from .phasespace import negativity
from .phasespace import purity
from .phasespace import wigner
