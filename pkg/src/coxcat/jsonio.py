"""JSON (de)serialization for every object kind handled by the CLI."""

from __future__ import annotations

from .core import SetPartition, ValidationError
from .encode import BPair, DPair, LatticePath, ShiftedTableau
from .models import MarkedPair, MarkedTriple
from .signed import SignedPartition


def set_partition_to_obj(p: SetPartition) -> dict:
    return {"n": p.n, "blocks": [list(b) for b in p.blocks]}


def set_partition_from_obj(o: dict) -> SetPartition:
    _need(o, "blocks")
    return SetPartition.from_blocks(o["blocks"], o.get("n"))


def signed_partition_to_obj(p: SignedPartition) -> dict:
    return {"n": p.n, "blocks": [list(b) for b in p.blocks]}


def signed_partition_from_obj(o: dict) -> SignedPartition:
    _need(o, "blocks")
    return SignedPartition.from_blocks(o["blocks"], o.get("n"))


def partition_from_obj(o: dict):
    """Unsigned when every element is positive, signed otherwise."""
    _need(o, "blocks")
    if any(x < 0 for b in o["blocks"] for x in b):
        return signed_partition_from_obj(o)
    return set_partition_from_obj(o)


def marked_pair_to_obj(m: MarkedPair) -> dict:
    return {"sigma": set_partition_to_obj(m.sigma), "marked": [list(b) for b in m.marked]}


def marked_pair_from_obj(o: dict) -> MarkedPair:
    _need(o, "sigma", "marked")
    return MarkedPair.make(set_partition_from_obj(o["sigma"]), o["marked"])


def marked_triple_to_obj(t: MarkedTriple) -> dict:
    out = marked_pair_to_obj(t.pair)
    out["epsilon"] = t.epsilon
    return out


def marked_triple_from_obj(o: dict) -> MarkedTriple:
    _need(o, "sigma", "marked", "epsilon")
    return MarkedTriple.make(set_partition_from_obj(o["sigma"]), o["marked"], o["epsilon"])


def path_to_obj(p: LatticePath) -> dict:
    return {"steps": p.steps}


def path_from_obj(o: dict) -> LatticePath:
    _need(o, "steps")
    return LatticePath(o["steps"])


def tableau_to_obj(t: ShiftedTableau) -> dict:
    return {
        "south": list(t.south),
        "east": list(t.east),
        "ones": sorted([r, c] for r, c in t.ones),
    }


def tableau_from_obj(o: dict) -> ShiftedTableau:
    _need(o, "south", "east", "ones")
    return ShiftedTableau.make(o["south"], o["east"], [tuple(rc) for rc in o["ones"]])


def _xslot_to_obj(x):
    if x is None:
        return None
    kind, val = x
    if kind == "edge":
        return {"edge": list(val)}
    if kind == "block":
        return {"block": list(val)}
    return {"int": val}


def _xslot_from_obj(o):
    if o is None:
        return None
    if "edge" in o:
        return ("edge", tuple(o["edge"]))
    if "block" in o:
        return ("block", tuple(sorted(o["block"])))
    if "int" in o:
        return ("int", int(o["int"]))
    raise ValidationError(f"bad x slot {o!r}")


def b_pair_to_obj(bp: BPair) -> dict:
    return {"sigma": set_partition_to_obj(bp.sigma), "x": _xslot_to_obj(bp.x)}


def b_pair_from_obj(o: dict) -> BPair:
    _need(o, "sigma", "x")
    return BPair(set_partition_from_obj(o["sigma"]), _xslot_from_obj(o["x"]))


def d_pair_to_obj(dp: DPair) -> dict:
    return {"sigma": set_partition_to_obj(dp.sigma), "x": _xslot_to_obj(dp.x)}


def d_pair_from_obj(o: dict) -> DPair:
    _need(o, "sigma", "x")
    return DPair(set_partition_from_obj(o["sigma"]), _xslot_from_obj(o["x"]))


def _need(o, *keys):
    if not isinstance(o, dict):
        raise ValidationError("expected a JSON object")
    for k in keys:
        if k not in o:
            raise ValidationError(f"missing key {k!r}")
