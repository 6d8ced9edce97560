"""Cross-validate all five routes to eps_g(d') and write the table.

    python3 scripts/cross_validate.py --max 6 --out results/table.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from hzfock.hzpipeline import METHODS, cross_validate, method_caps


@dataclass
class Config:
    max: int = 5
    out: str = ""


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max", type=int, default=Config.max)
    p.add_argument("--out", default=Config.out, help="optional JSON output path")
    cfg = Config(**vars(p.parse_args()))

    print(f"caps: {method_caps()}")
    start = time.perf_counter()
    report = cross_validate(cfg.max)
    elapsed = time.perf_counter() - start

    for d in range(1, cfg.max + 1):
        cells = []
        for m in METHODS:
            row = report.row(d, m)
            cells.append(f"{m}={row}" if None not in row else f"{m}=skip")
        print(f"d'={d}: " + "  ".join(cells))
    print(f"verdict {report.verdict} in {elapsed:.2f}s")

    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"config": asdict(cfg), "seconds": elapsed, **report.to_dict()}, indent=2))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
