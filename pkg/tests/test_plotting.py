from __future__ import annotations

from clawstem.cli import main
from clawstem.plotting import draw_tree, draw_validation
from clawstem.search import solve
from clawstem.validation import validate

PNG_MAGIC = b"\x89PNG"


def test_draw_tree_with_certificate(tmp_path, sharp):
    lg = sharp(1, 0)
    rep = solve(lg.graph, 0)
    out = tmp_path / "t.png"
    draw_tree(lg.graph, rep.tree, str(out), highlight=rep.certificate.vertices,
              labels=[lg.role_name(v) for v in range(lg.graph.n)])
    assert out.read_bytes()[:4] == PNG_MAGIC


def test_draw_validation(tmp_path):
    out = tmp_path / "v.pdf"
    draw_validation(validate(1, 8, [0, 1], 3, 8), str(out))
    assert out.read_bytes()[:4] == b"%PDF"


def test_cli_figure(tmp_path, capsys):
    g = tmp_path / "g.el"
    main(["gen", "sharp", "--m", "2", "--k", "1", "-o", str(g)])
    fig = tmp_path / "solve.png"
    assert main(["solve", str(g), "--k", "1", "--figure", str(fig)]) == 0
    capsys.readouterr()
    assert fig.read_bytes()[:4] == PNG_MAGIC
