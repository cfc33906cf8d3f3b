"""
qtheta — theta series, CM eigenforms and spherical design checks for the
ideal lattices of imaginary quadratic fields.

    python app.py theta --d 5 --class 0 --N 10
    python app.py verify --all --N 1000
"""
import sys

from modules.cli import run

if __name__ == "__main__":
    sys.exit(run())
