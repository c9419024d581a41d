"""
Loading of fitted coefficient tables
"""
import os

import pandas as pd

from models.expansion import KernelExpansion
from utils.errors import DomainError
from utils.helpers import log_status

COEFFICIENT_COLUMNS = ["n", "alpha", "beta"]


class CoefficientLoader:
    """Reads an n,alpha,beta CSV (as written by the fit command) into an expansion"""

    def __init__(self, csv_path: str):
        self.csv_path = csv_path
        self.df = None

    def load_csv(self):
        """Load CSV with encoding fallback"""
        if not os.path.exists(self.csv_path):
            raise FileNotFoundError(f"❌ File {self.csv_path} not found.")

        try:
            self.df = pd.read_csv(self.csv_path, encoding="utf-8", float_precision="round_trip")
        except UnicodeDecodeError:
            self.df = pd.read_csv(self.csv_path, encoding="latin1", float_precision="round_trip")

        # Clean column names
        self.df.columns = [str(c).strip().lower() for c in self.df.columns]

        missing = [c for c in COEFFICIENT_COLUMNS if c not in self.df.columns]
        if missing:
            raise DomainError(f"❌ {self.csv_path} is missing columns: {', '.join(missing)}")

        log_status(f"✅ Loaded: {len(self.df):,} coefficient rows from {self.csv_path}")

        return self.df

    def to_expansion(self):
        """Validate the term indices and build the expansion"""
        if self.df is None:
            self.load_csv()

        df = self.df.sort_values("n", kind="stable")
        indices = [int(n) for n in df["n"]]
        if indices != list(range(len(indices))):
            raise DomainError(f"❌ Term indices must be 0..N without gaps, got {indices}")

        terms = tuple(zip(df["alpha"].astype(float), df["beta"].astype(float)))
        return KernelExpansion(terms=terms)


def load_expansion(csv_path):
    """Read a coefficient CSV back into a KernelExpansion"""
    return CoefficientLoader(csv_path).to_expansion()
