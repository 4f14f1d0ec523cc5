"""Rewrite the bundled fixture files from the definitions in cxone.fixtures."""

from pathlib import Path

from cxone import fixtures

root = Path(__file__).resolve().parents[1] / "src" / "cxone" / "data"
for name in fixtures.NAMES:
    d = root / name
    d.mkdir(parents=True, exist_ok=True)
    for fname, text in fixtures.render(name).items():
        (d / fname).write_text(text)
        print(d / fname)
