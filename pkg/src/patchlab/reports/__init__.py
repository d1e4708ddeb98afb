"""Analysis reports: per-antenna metrics, two-antenna comparisons and
pattern-cut CSV files.
"""
