"""Growth of matrix wreath products A wr F[t^-1, t] and their semigroup analogs."""

__version__ = "0.1.0"

from .errors import (AssociativityError, CapError, ConfigError, HorizonError,
                     HorizonTooSmallError, LayerRangeError, MalformedElementError,
                     PreconditionError, UnsupportedModeError, WreathGrowthError)
from .fields import Field
from .algebra import (AlgElement, Algebra, MonomialQuotientAlgebra, PolynomialAlgebra,
                      StructureConstantAlgebra, weighted_filtration_W)
from .sequence import GeneratingSequence
from .wreath import (WreathElement, WreathProduct, canonicalize, honest_window, is_zero,
                     make_generators, verify_left_ideal, verify_two_sided_banded, wreath_mul)
from .echelon import LabelIndex, SpanBasis, echelon_insert
from .growth import (GrowthRun, GrowthSeries, check_filtration_in_power, check_power_shape,
                     growth_series, membership, run_growth, w_series)
from .asymptotics import (FunctionDescriptor, build_dilution, corollary1_check, fit_eq1,
                          gk_slope, merge_subexponential, preceq_witness, probe_composition,
                          subexp_probe, superlinearize)
from .semigroup import (ReesElement, SemigroupSpec, rees_mul, semigroup_growth,
                        verify_left_ideal_semigroup)
from .config import RunConfig

__all__ = [name for name in dir() if not name.startswith("_")]
