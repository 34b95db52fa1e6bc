"""Scan both corollary criteria and print hits with their defining sextics."""
import argparse
from dataclasses import dataclass

from simplest_cubic import FieldParam
from simplest_cubic.applications import COR1, COR2, non_square_certificate, scan_corollary


@dataclass
class ScanConfig:
    lo: int = 1
    hi: int = 1000
    certify: bool = False


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=int, default=ScanConfig.lo)
    p.add_argument("--hi", type=int, default=ScanConfig.hi)
    p.add_argument("--certify", action="store_true", help="also run the non-square certificate for Cor1 hits")
    cfg = ScanConfig(**vars(p.parse_args()))
    for which in (COR1, COR2):
        for h in scan_corollary(which, cfg.lo, cfg.hi):
            status = "hit" if h.is_hit else f"excluded ({h.excluded_reason})"
            line = f"{which} a={h.a} b={h.b} m={h.m} {status}"
            if h.is_hit and which == COR1 and cfg.certify:
                line += f" certificate={non_square_certificate(FieldParam(h.a)).holds}"
            print(line)


if __name__ == "__main__":
    main()
