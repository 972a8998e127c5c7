_base_ = ['../_base_/default_runtime.py']

seed = 20240601
rate_grid = dict(
    c_values=[2, 4, 8],
    n_values=[250, 1000, 4000],
    replications=200,
    probe_samples=100)
