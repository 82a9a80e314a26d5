from .objects import GridSpec1D
from .objects import GridSpec2D
from .objects import SampledField1D
from .objects import SampledField2D
from .quadrature import integrate_1d
from .quadrature import integrate_2d
from .quadrature import integrate_axis
from .quadrature import suffix_integral
from .quadrature import tail_extent
