import pytest

from varikon import box, groups, solver, words


@pytest.fixture(scope="session")
def distance_table():
    return groups.build_distance_table()


@pytest.fixture(scope="session")
def center_elements(distance_table):
    return groups.center(distance_table)


@pytest.fixture(scope="session")
def reachable_set():
    return box.enumerate_reachable()


@pytest.fixture(scope="session")
def a5_table():
    return words.build_a5_table()


@pytest.fixture(scope="session")
def a6_table():
    return words.build_a6_table()


@pytest.fixture(scope="session")
def box_solver(distance_table):
    # share the session BFS table so the solver does not rebuild it
    return solver.Solver(distance_table)
