"""Negative-control mutation switches.

Each named mutation deliberately corrupts one rule deep inside the engine so
that the verification suites can demonstrate they would catch such a bug.
Production code consults ``is_active`` at the mutation site; everything is off
by default.
"""

from contextlib import contextmanager

KNOWN_MUTATIONS = frozenset(
    {
        "drop-sign",  # ribbon relative sign forced to +1
        "drop-framing",  # vertex weight loses its q^{kappa/2} framing factor
        "gamma-prime-no-transpose",  # primed vertex operators skip the transpose
        "mn-off-by-one",  # character recursion uses height+1 in the sign
        "tau-perturb",  # one coefficient of the tau series is perturbed
        "wrong-p-plus",  # merged power-sum rule loses its alternating sign
    }
)

_active: set[str] = set()
_cache_clearers: list = []


def register_cache(clearer) -> None:
    """Register a cache-clear callback invoked on every mutation toggle.

    Memoized results computed under a mutation must never leak into clean
    runs (or vice versa), so caches of mutation-sensitive functions are
    flushed whenever the active set changes.
    """
    _cache_clearers.append(clearer)


def _flush_caches() -> None:
    for clearer in _cache_clearers:
        clearer()


def activate(name: str) -> None:
    if name not in KNOWN_MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}; known: {sorted(KNOWN_MUTATIONS)}")
    _active.add(name)
    _flush_caches()


def deactivate(name: str) -> None:
    _active.discard(name)
    _flush_caches()


def is_active(name: str) -> bool:
    return name in _active


def active_names() -> tuple[str, ...]:
    return tuple(sorted(_active))


@contextmanager
def mutate(*names: str):
    """Temporarily enable the named mutations."""
    for name in names:
        activate(name)
    try:
        yield
    finally:
        for name in names:
            deactivate(name)
