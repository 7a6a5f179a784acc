"""Python access to the radgeo verification library."""
import json
import os

try:
    from . import _radgeo
except ImportError:  # in-tree build: the extension sits next to the build tree
    import _radgeo

InputError = _radgeo.InputError
ResourceError = _radgeo.ResourceError

# directories of the checkout the extension was built from
_SOURCE = _radgeo.source_dir


def class_table(group):
    """2-subgroup class table of a named small group (S4, S5, GL32, C2, C2xC2)."""
    return json.loads(_radgeo.class_table_json(group))


def small_group_names():
    return list(_radgeo.small_group_names())


def selftest():
    return json.loads(_radgeo.selftest_json())


def small_groups(golden_dir=None):
    return json.loads(_radgeo.small_groups_json(golden_dir or os.path.join(_SOURCE, "tests", "golden")))


def engine_properties(seed=1, complexes=50):
    return json.loads(_radgeo.engine_properties_json(seed, complexes))


def co3(suite, gens=None, seed=1, enumerate_2b=False):
    """Runs one suite on the 276-point generators and returns the report entries."""
    gens = gens or os.path.join(_radgeo.data_dir, "co3_276.gens")
    return json.loads(_radgeo.co3_json(suite, gens, seed, enumerate_2b))


def euler_by_orbit_counting(flags, group_order):
    """flags: iterable of (name, flag size, stabilizer order). Exact integer result."""
    return int(_radgeo.euler_by_orbit_counting(list(flags), group_order))


reduced_betti = _radgeo.reduced_betti
reduced_euler = _radgeo.reduced_euler
greedy_collapse = _radgeo.greedy_collapse


def passed(report):
    return all(e["status"] != "fail" for e in report)
