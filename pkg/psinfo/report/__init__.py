from .objects import MeasureEntry
from .objects import MeasureReport
from .objects import SweepTable
from .objects import Tolerances
from .report import compute_all
from .report import expected_measures
from .report import renyi_orders
from .report import sweep
from .report import worker_count
