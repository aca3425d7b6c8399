# Core package for MDM active sets
from .models import ActiveSet, Method, WeightParams
from .opt import opt_set
from .pw import pw_set
from .qopt import qopt_set
from .weights import validate_params

__all__ = ["ActiveSet", "Method", "WeightParams", "opt_set", "pw_set", "qopt_set", "validate_params"]
