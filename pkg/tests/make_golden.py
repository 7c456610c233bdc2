"""Regenerate the golden CLI outputs (run from the repository root)."""

import io
import pathlib

from magiclat.cli import main

HERE = pathlib.Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = {
    "hilbert_k3.txt": ["hilbert", "fixtures/k3.txt"],
    "hilbert_pi2.json": ["hilbert", "fixtures/pi2.txt", "--json"],
    "count_pi3_sum2.txt": ["count", "fixtures/pi3.txt", "--sum", "2"],
    "count_pi3_sum2.json": ["count", "fixtures/pi3.txt", "--sum", "2", "--json"],
    "ehrhart_c4.json": ["ehrhart", "fixtures/c4.txt", "--json"],
    "ehrhart_k3.txt": ["ehrhart", "fixtures/k3.txt"],
    "ehrhart_path3.json": ["ehrhart", "fixtures/path3.txt", "--json"],
    "faces_gamma3.json": ["faces", "fixtures/gamma3.txt", "--json"],
    "faces_pi3_dim0.txt": ["faces", "fixtures/pi3.txt", "--dim", "0"],
    "poset_pi2.dot": ["poset", "fixtures/pi2.txt", "--dot"],
    "edge_graph_gamma3.dot": ["edge-graph", "fixtures/gamma3.txt", "--dot"],
    "classes_pi3_dim0.txt": ["classes", "fixtures/pi3.txt", "--dim", "0"],
    "classes_pi3_dim1.json": ["classes", "fixtures/pi3.txt", "--dim", "1", "--json"],
    "birkhoff_n2_faces.txt": ["birkhoff", "--n", "2", "faces"],
    "matchings_k4.txt": ["matchings", "fixtures/k4.txt"],
    "matchings_k3_max2.txt": ["matchings", "fixtures/k3.txt", "--max", "2"],
    "factorize_k22.txt": ["factorize", "fixtures/k22.txt", "fixtures/k22_ones.txt"],
    "cayley_z2.txt": ["cayley", "fixtures/z2.table"],
    "cayley_s3_tail.json": ["cayley", "fixtures/s3.table", "--json"],
    "convert_bipartite_dc3.txt": ["convert", "bipartite", "fixtures/dc3.txt"],
    "convert_matrix_k22.txt": ["convert", "matrix", "fixtures/k22_ones.txt"],
    "convert_labeling_pi.txt": ["convert", "labeling", "fixtures/semimagic22.txt", "--target", "pi"],
    "check_pi3.txt": ["check", "fixtures/pi3.txt"],
    "check_path3.json": ["check", "fixtures/path3.txt", "--json"],
}


def render(argv):
    buffer = io.StringIO()
    argv = [str(HERE / a) if a.startswith("fixtures/") else a for a in argv]
    code = main(argv, out=buffer)
    if code != 0:
        raise SystemExit(f"{argv}: exit code {code}")
    return buffer.getvalue()


def regenerate():
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        (GOLDEN / name).write_text(render(argv), encoding="utf-8")
        print("wrote", name)


if __name__ == "__main__":
    regenerate()
