_base_ = ['./rate_grid_default.py']

rate_grid = dict(n_values=[250, 1000], replications=30, probe_samples=50)
