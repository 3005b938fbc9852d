import pytest

from ballseq import DEFAULT_BUDGET, enumerate_counts


@pytest.fixture(scope="session")
def oracle_tables():
    """Memoized exhaustive census per (k, n).

    Enumeration dominates suite runtime, and several tests sweep
    overlapping scopes, so tables are shared for the whole session.  The
    budget is lifted as needed; budget refusal has its own tests.
    """
    cache = {}

    def get(k, n):
        if (k, n) not in cache:
            budget = max(DEFAULT_BUDGET, n**k)
            cache[k, n] = enumerate_counts(k, n, budget=budget)
        return cache[k, n]

    return get
