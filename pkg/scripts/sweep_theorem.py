"""Verify the minimal-norm theorem over a range of a and summarize class counts.

    python scripts/sweep_theorem.py --lo 1 --hi 200 --out results/theorem.jsonl
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from simplest_cubic import FieldParam, verify_theorem


@dataclass
class SweepConfig:
    lo: int = 1
    hi: int = 100
    spot: tuple = (1000, 10000)
    out: str = ""


def parse_config() -> SweepConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        if f.name != "spot":
            p.add_argument(f"--{f.name}", type=type(f.default), default=f.default)
    p.add_argument("--spot", type=int, nargs="*", default=list(SweepConfig.spot))
    return SweepConfig(**vars(p.parse_args()))


def main():
    cfg = parse_config()
    t0 = time.perf_counter()
    rows, failed = [], []
    for a in [*range(cfg.lo, cfg.hi + 1), *cfg.spot]:
        rep = verify_theorem(FieldParam(a))
        rows.append({"a": a, "verified": rep.verified, **rep.stats})
        if not rep.verified:
            failed.append(a)
    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(json.dumps(r, default=str) + "\n" for r in rows))
    print(json.dumps({"config": asdict(cfg), "checked": len(rows), "failed": failed,
                      "seconds": round(time.perf_counter() - t0, 2)}))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
