"""Propositional proof kernel: formulas, four proof calculi with checkers,
and constructive completeness, translation and cut elimination."""

from .cutfree import GcfDerivation, check_gcf, cut_elimination, gcf_prove, size, sizes
from .errors import (
    BadArity,
    BadIndex,
    EmbeddingInvalid,
    InternalSoundnessBreach,
    ParseError,
    PreconditionViolated,
    ProofError,
    PropkitError,
    RuleMismatch,
    SerializationError,
    TooManyVariables,
    UnknownRule,
)
from .formula import BOT, TOP, Bot, Conj, Disj, Formula, Impl, Var, format_formula, neg, parse, parse_list, variables_of
from .hilbert import HcDerivation, check_hc, hc_deduction, hc_to_nc, nc_to_hc
from .natded import NcDerivation, check_nc, nc_weaken
from .normalforms import cnf_provable, complete, make_cnf, make_nnf
from .semantics import evaluate, find_countermodel, is_valid, models, sequent_countermodel, sequent_models
from .sequent import GcDerivation, check_gc, g_to_nc, g_to_nc_neg, gc_weaken, nc_to_g
from .serialize import check_derivation, from_json, to_json

__version__ = "0.1.0"
