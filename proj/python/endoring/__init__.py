"""Endomorphism rings of finitely presented graded modules over F_p[x1..xn]."""

import json

from ._endoring import (
    DEFAULT_PRIME,
    Module,
    PreconditionError,
    SchemaError,
    auslander_dual,
    betti,
    cyclic_module,
    depth,
    direct_sum,
    dual,
    end,
    ext,
    free_module,
    generic_determinantal,
    has_free_summand,
    hom,
    is_reflexive,
    koszul_cycles,
    minimalize,
    nu,
    one_relation_module,
    perfect_syzygy,
    projective_dimension,
    rank,
    tensor,
    tor,
)
from . import _endoring as _core


def verify_ausbr0(e, window=None):
    return json.loads(_core.verify_ausbr0_json(e, window))


def verify_adual(e, x, window=None):
    return json.loads(_core.verify_adual_json(e, x, window))


def verify_perfect_syzygy_sequence(m, k, window=None):
    return json.loads(_core.verify_perfect_syzygy_json(m, k, window))


def radical_profile(e):
    return json.loads(_core.radical_profile_json(e))


def is_local_module(e):
    return radical_profile(e)["is_local"]


def radical_block_profile(e1, e2):
    return json.loads(_core.radical_blocks_json(e1, e2))


def generator_bound_report(e):
    return json.loads(_core.generator_bounds_json(e))


def trace_of_identity(e):
    return _core.endomorphism_trace_identity(e)


def module_from_dict(d):
    return Module.from_json(json.dumps(d))


def module_to_dict(m):
    return json.loads(m.to_json())
