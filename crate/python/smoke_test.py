#!/usr/bin/env python3
"""Smoke test for the temporal_games_py extension module.

Builds nothing itself: it locates the compiled cdylib under target/ (debug or
release), exposes it under the importable module name, and round-trips a few
games through the bindings. Run `cargo build -p temporal-games-python` first,
then `python3 python/smoke_test.py`.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_extension() -> pathlib.Path:
    candidates = []
    for profile in ("debug", "release"):
        for suffix in (".so", ".dylib"):
            candidates.append(ROOT / "target" / profile / f"libtemporal_games_py{suffix}")
    for path in candidates:
        if path.exists():
            return path
    sys.exit("extension not built; run: cargo build -p temporal-games-python")


def import_module():
    lib = locate_extension()
    staging = pathlib.Path(tempfile.mkdtemp(prefix="temporal_games_py"))
    shutil.copy(lib, staging / "temporal_games_py.so")
    sys.path.insert(0, str(staging))
    import temporal_games_py

    return temporal_games_py


def main() -> None:
    tg = import_module()

    # A late edge is unreachable without waiting and reachable with it.
    game = tg.Game.parse(
        "kind temporal-explicit\n"
        "vertex s owner=1\n"
        "vertex t owner=1\n"
        "edge s t avail={2}\n"
        "start s\n"
        "objective reach t\n"
    )
    assert game.kind == "temporal-explicit"
    assert game.one_player
    assert game.solve().winner == 2
    waited = game.solve(waiting=True)
    assert waited.winner == 1
    assert waited.witness == [("s", 0), ("s", 1), ("s", 2), ("t", 3)]
    assert game.check_witness(waited.witness, waiting=True)
    assert not game.check_witness(waited.witness, waiting=False)

    # Emission round-trips.
    assert tg.Game.parse(game.emit()).emit() == game.emit()

    # QBF oracle and both reductions on a true formula.
    qbf = tg.Qbf.parse("p cnf 3 4\ne 1 0\na 2 0\ne 3 0\n2 3 0\n-1 -2 -3 0\n1 2 0\n1 3 0\n")
    assert qbf.brute_force() is True
    assert qbf.normalize().emit() == qbf.emit()
    assert qbf.to_temporal_game().solve().winner == 1
    assert qbf.to_symbolic_game().solve().winner == 1

    unsat = tg.Qbf.parse("p cnf 1 2\ne 1 0\n1 0\n-1 0\n")
    assert unsat.brute_force() is False
    assert unsat.to_symbolic_game().solve().winner == 2

    # Hamiltonian path exists on a path graph, not on an out-star.
    assert tg.hamiltonian_game(3, [(0, 1), (1, 2)]).solve().winner == 1
    assert tg.hamiltonian_game(3, [(0, 1), (0, 2)]).solve().winner == 2

    # Static explorability matches reachability after the reduction. The
    # Player 2 vertex has a single edge, so Player 1 wins the reach game.
    static = tg.Game.parse(
        "kind static\n"
        "vertex s owner=1\n"
        "vertex m owner=2\n"
        "vertex t owner=1\n"
        "edge s m\n"
        "edge m t\n"
        "start s\n"
        "objective reach t\n"
    )
    assert static.solve().winner == 1
    explore = tg.reach_to_explore_game(static, "s", "t")
    result = explore.solve()
    assert result.winner == 1
    assert result.method == "static"

    print("smoke test passed")


if __name__ == "__main__":
    main()
