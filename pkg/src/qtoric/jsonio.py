"""JSON encodings for every object the CLI reads or writes.

Integers beyond the 53-bit safe range are serialized as decimal strings;
exact rationals travel as "p/q" strings, floating values as JSON numbers.
Emitted documents are canonical: sorted keys, fixed list orders.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .geometry import Cone, Fan, Polytope, make_fan, polytope_hull, pos_hull
from .monoid import MonoidGenerators
from .qubit import ChartAtlas, ParameterizationMap
from .rationals import ComplexRational, rational_str
from .segre import MinorSpec, ProductState, PureState
from .toric_ideal import Binomial, BinomialIdeal, MonomialMap

_SAFE = 2 ** 53


def encode_int(x: int):
    return x if abs(x) <= _SAFE else str(x)


def decode_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError("expected an integer, got a boolean")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x)
    raise ValueError(f"expected an integer, got {x!r}")


def _vector_out(v):
    return [encode_int(x) for x in v]


def _vector_in(v):
    if not isinstance(v, list):
        raise ValueError(f"expected a list of integers, got {v!r}")
    return tuple(decode_int(x) for x in v)


def cone_to_json(c: Cone) -> dict:
    return {"dim": c.dim, "generators": [_vector_out(g) for g in c.generators]}


def cone_from_json(data) -> Cone:
    if not isinstance(data, dict) or "dim" not in data:
        raise ValueError("cone JSON needs 'dim' and 'generators'")
    dim = decode_int(data["dim"])
    gens = [_vector_in(g) for g in data.get("generators", [])]
    return pos_hull(gens, dim)


def polytope_to_json(p: Polytope) -> dict:
    return {"dim": p.dim, "vertices": [_vector_out(v) for v in p.vertices]}


def polytope_from_json(data) -> Polytope:
    if not isinstance(data, dict) or "dim" not in data or "vertices" not in data:
        raise ValueError("polytope JSON needs 'dim' and 'vertices'")
    dim = decode_int(data["dim"])
    return polytope_hull([_vector_in(v) for v in data["vertices"]], dim)


def fan_to_json(f: Fan) -> dict:
    return {"dim": f.dim, "cones": [cone_to_json(c) for c in f.cones]}


def fan_from_json(data) -> Fan:
    if not isinstance(data, dict) or "dim" not in data or "cones" not in data:
        raise ValueError("fan JSON needs 'dim' and 'cones'")
    dim = decode_int(data["dim"])
    return make_fan([cone_from_json(c) for c in data["cones"]], dim)


def monoid_to_json(m: MonoidGenerators) -> dict:
    return {"cone": cone_to_json(m.cone),
            "generators": [_vector_out(g) for g in m.generators]}


def map_to_json(m: MonomialMap) -> dict:
    return {"dim": m.dim, "exponents": [_vector_out(a) for a in m.exponents]}


def map_from_json(data) -> MonomialMap:
    if isinstance(data, list):
        exponents = [_vector_in(a) for a in data]
        if not exponents:
            raise ValueError("monomial map needs at least one exponent vector")
        return MonomialMap(len(exponents[0]), tuple(exponents))
    if isinstance(data, dict) and "exponents" in data:
        exponents = [_vector_in(a) for a in data["exponents"]]
        dim = decode_int(data["dim"]) if "dim" in data else len(exponents[0])
        return MonomialMap(dim, tuple(exponents))
    raise ValueError("monomial map JSON must be a list of exponent vectors "
                     "or {'dim':..,'exponents':..}")


def binomial_to_json(b: Binomial) -> dict:
    return {"nu": _vector_out(b.nu), "mu": _vector_out(b.mu)}


def ideal_to_json(ideal: BinomialIdeal) -> dict:
    return {"map": map_to_json(ideal.map),
            "degreeBound": ideal.degree_bound,
            "generators": [binomial_to_json(b) for b in ideal.generators]}


def _amplitude_out(value) -> dict:
    if isinstance(value, ComplexRational):
        return {"re": rational_str(value.re), "im": rational_str(value.im)}
    if isinstance(value, (int, Fraction)):
        return {"re": rational_str(Fraction(value)), "im": "0"}
    z = complex(value)
    return {"re": z.real, "im": z.imag}


def _amplitude_part_in(x):
    if isinstance(x, bool):
        raise ValueError("amplitude parts must be numbers or 'p/q' strings")
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return x
    raise ValueError(f"bad amplitude part {x!r}")


def _amplitude_in(data):
    re = _amplitude_part_in(data.get("re", 0))
    im = _amplitude_part_in(data.get("im", 0))
    if isinstance(re, Fraction) and isinstance(im, Fraction):
        return ComplexRational(re, im)
    return complex(float(re), float(im))


def state_to_json(s: PureState) -> dict:
    entries = []
    for idx in sorted(s.amplitudes):
        entry = {"index": list(idx)}
        entry.update(_amplitude_out(s.amplitudes[idx]))
        entries.append(entry)
    return {"shape": list(s.shape), "amplitudes": entries}


def state_from_json(data) -> PureState:
    """Parse a state; exact only when every amplitude part is exact.

    A single floating part downgrades the whole state to complex floats so
    amplitude arithmetic never mixes exact and floating operands.
    """
    if not isinstance(data, dict) or "shape" not in data or "amplitudes" not in data:
        raise ValueError("state JSON needs 'shape' and 'amplitudes'")
    shape = tuple(decode_int(n) for n in data["shape"])
    amps = {}
    for entry in data["amplitudes"]:
        idx = tuple(decode_int(i) for i in entry["index"])
        amps[idx] = _amplitude_in(entry)
    if any(not isinstance(v, ComplexRational) for v in amps.values()):
        amps = {idx: complex(v) for idx, v in amps.items()}
    return PureState(shape, amps)


def product_state_to_json(p: ProductState) -> dict:
    return {"locals": [[_amplitude_out(x) for x in v] for v in p.locals]}


def minor_to_json(minor: MinorSpec) -> dict:
    return {"mode": minor.mode, "k": list(minor.k), "l": list(minor.l)}


def atlas_to_json(atlas: ChartAtlas) -> dict:
    return {
        "fan": fan_to_json(atlas.fan),
        "charts": [{"cone": cone_to_json(ch.cone),
                    "coordinates": [_vector_out(c) for c in ch.coordinates]}
                   for ch in atlas.charts],
        "transitions": [{"from": i, "to": j,
                         "matrix": [_vector_out(row) for row in mat]}
                        for i, j, mat in atlas.transitions],
    }


def parameterization_to_json(pm: ParameterizationMap) -> dict:
    return {"m": pm.m, "exponents": [list(e) for e in pm.exponents]}


def _rational_part_in(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ValueError("torus coordinates must be exact: use 'p/q' strings")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise ValueError(f"bad exact rational {x!r}")


def torus_point_from_json(data):
    """A list of nonzero exact complex rationals: 'p/q' or {'re':..,'im':..}."""
    if not isinstance(data, list):
        raise ValueError("torus point must be a JSON list")
    point = []
    for entry in data:
        if isinstance(entry, dict):
            point.append(ComplexRational(_rational_part_in(entry.get("re", 0)),
                                         _rational_part_in(entry.get("im", 0))))
        else:
            point.append(ComplexRational(_rational_part_in(entry)))
    return tuple(point)


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
