"""Joint fixed points of commutative isotone map families on finite posets."""

from .engine import (
    FixReport,
    Method,
    OrbitResult,
    extensivity_domain,
    fixed_points_single,
    joint_fixed_points,
    kleene_iterate,
    least_joint_fixed_point,
    orbit,
    round_robin_solve,
)
from .errors import JointfixError, PreconditionViolated
from .generators import (
    GenSpec,
    join_translation_family,
    make_instance,
    make_standard_poset,
    random_commuting_family,
    random_isotone_map,
)
from .instance import dumps_instance, load_instance, parse_instance
from .mappings import (
    ClosureSet,
    Family,
    MapTable,
    build_map,
    compose,
    identity_map,
    is_chain_continuous,
    is_commutative_family,
    is_isotone,
    iteration_closure,
)
from .oracle import Verdict, brute_force_fixed_points, verify_approximation, verify_structure
from .poset import Poset, build_poset

__version__ = "0.1.0"
