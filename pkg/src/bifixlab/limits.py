"""Size caps for the powerset and closure engines.

The defaults can be tightened with the ``BIFIXLAB_MAX_MEM_MB`` environment
variable; the cap derived from it never exceeds the static default.
"""
import os

DEFAULT_MAX_STATES = 2**20
DEFAULT_MAX_ELEMENTS = 5 * 10**6
DEFAULT_MAX_LETTERS = 50_000

# rough per-item footprints in bytes, including dict/set overhead
_BYTES_PER_SUBSET = 200
_BYTES_PER_ELEMENT = 64


def _mem_budget():
    raw = os.environ.get("BIFIXLAB_MAX_MEM_MB")
    if not raw:
        return None
    try:
        mb = float(raw)
    except ValueError:
        return None
    return max(mb, 0.0) * 2**20


def max_states(override=None):
    if override is not None:
        return int(override)
    budget = _mem_budget()
    if budget is None:
        return DEFAULT_MAX_STATES
    return max(1, min(DEFAULT_MAX_STATES, int(budget // _BYTES_PER_SUBSET)))


def max_elements(override=None, n=0):
    if override is not None:
        return int(override)
    budget = _mem_budget()
    if budget is None:
        return DEFAULT_MAX_ELEMENTS
    per = _BYTES_PER_ELEMENT + n
    return max(1, min(DEFAULT_MAX_ELEMENTS, int(budget // per)))
