from .divergence import cauchy_schwarz_divergence
from .divergence import kl_divergence
from .divergence import mutual_information
from .divergence import renyi_divergence
from .divergence import renyi_mutual_information
from .entropy import check_fisher_bound
from .entropy import check_renyi_bound
from .entropy import check_shannon_bound
from .entropy import check_wehrl_floor
from .entropy import fisher_information
from .entropy import fisher_information_discrete
from .entropy import renyi_1d
from .entropy import renyi_bound
from .entropy import renyi_phase_space
from .entropy import shannon_1d
from .entropy import wehrl_entropy
from .entropy import wigner_entropy
from .objects import BoundCheck
from .objects import ComplexEntropy
from .objects import DensityPair
from .objects import MutualInformationResult
from .objects import SurvivalField1D
from .objects import SurvivalField2D
from .survival import cross_cumulative_residual_entropy
from .survival import cumulative_residual_entropy
from .survival import jeffreys_divergence
from .survival import survival_1d
from .survival import survival_2d
