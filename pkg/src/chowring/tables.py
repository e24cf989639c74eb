"""Published values of the three tables, keyed by (table, k, sorted incidence).

Table 1 is keyed by the weight of the distinguished coordinate, with weight 1
standing for the quintic in P^4; its incidence is ``None``.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .invariants import InvariantRequest

Key = Tuple[int, int, Optional[Tuple[int, int, int]]]

_TABLE1 = {1: 2875, 2: 7884, 4: 29504}

_TABLE3 = {
    3: {(1, 1): 2875},
    4: {(1, 1): 60480},
    5: {(1, 1): 1009792, (1, 2): 1707797},
    6: {(1, 1): 15984640, (1, 2): 37502976, (2, 2): 59021312},
    7: {(1, 1): 253490796, (1, 2): 763954092, (1, 3): 1069047153,
        (2, 2): 1579510449},
    8: {(1, 1): 4120776000, (1, 2): 15274952000, (1, 3): 27768048000,
        (2, 2): 38922224000, (2, 3): 51415320000},
    9: {(1, 1): 69407571816, (1, 2): 307393401172, (1, 3): 695221679878,
        (1, 4): 905702054829, (2, 2): 933207509234, (2, 3): 1531516162891,
        (3, 3): 1919344441597},
    10: {(1, 1): 1217507106816, (1, 2): 6306655500288,
         (1, 3): 17225362851840, (1, 4): 28015971489792,
         (2, 2): 22314511245312, (2, 3): 44023827234816,
         (2, 4): 54814435872768, (3, 3): 65733143224320},
}

_TABLE4 = {
    3: {(1, 1): 4874000},
    4: {(1, 1): 1763536320},
    5: {(1, 1): 488959144352, (1, 2): 1021575491286},
    6: {(1, 1): 133588638826496, (1, 2): 448681408315392,
        (2, 2): 821654025830400},
    7: {(1, 1): 39031273362637440, (1, 2): 187554590257349088,
        (1, 3): 312074852318965368, (2, 2): 506855012110118424},
    8: {(1, 1): 12607965435718224000, (1, 2): 80684596772238448000,
        (1, 3): 200581960800610752000, (2, 2): 295035175517918176000,
        (2, 3): 444475303469701680000},
    9: {(1, 1): 4565325719860021608624, (1, 2): 37005001823802188657624,
        (1, 3): 127922335050535174614916, (1, 4): 193693669320390878077186,
        (2, 2): 173901546566279203106468, (2, 3): 364629304647788940660824,
        (3, 3): 498705676383823268404990},
    10: {(1, 1): 1861791822397620935737344, (1, 2): 18415607624138339954786304,
         (1, 3): 83885220561474498867757056, (1, 4): 179982840924749584358866944,
         (2, 2): 107227899142191919158312960, (2, 3): 297755098999730079369412608,
         (2, 4): 417950364467570984815214592, (3, 3): 527556832251612742800359424},
}

FAMILY_OF_TABLE = {1: "weighted-lines", 3: "gw-lines", 4: "gw-conics"}


def _incidence_key(k: int, a: int, b: int) -> Tuple[int, int, int]:
    return tuple(sorted((a, b, k - a - b)))


def _build() -> Dict[Key, int]:
    out: Dict[Key, int] = {}
    for w, v in _TABLE1.items():
        out[(1, w, None)] = v
    for table, data in ((3, _TABLE3), (4, _TABLE4)):
        for k, row in data.items():
            for (a, b), v in row.items():
                out[(table, k, _incidence_key(k, a, b))] = v
    return out


EXPECTED: Dict[Key, int] = _build()


def table_requests(table_id: int) -> List[InvariantRequest]:
    """One request per cell of a table, in the table's own order."""
    if table_id not in FAMILY_OF_TABLE:
        raise KeyError(f"unknown table {table_id}; choose 1, 3 or 4")
    family = FAMILY_OF_TABLE[table_id]
    keys = sorted((key for key in EXPECTED if key[0] == table_id),
                  key=lambda key: (key[1], key[2] or ()))
    return [InvariantRequest(family, k, inc) for _, k, inc in keys]


def key_of(req: InvariantRequest) -> Key:
    table = {v: t for t, v in FAMILY_OF_TABLE.items()}[req.family]
    return (table, req.k, tuple(sorted(req.incidence)) if req.incidence else None)
