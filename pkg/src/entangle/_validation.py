import numpy as np


def check_states(X, state_shape=None):
    """Coerce a batch of states to complex ``(n_samples, n_1, ..., n_r)``.

    sklearn's ``check_array`` refuses complex input, hence this helper.
    """
    X = np.asarray(X)
    if X.dtype == object or not (
        np.issubdtype(X.dtype, np.number) or np.issubdtype(X.dtype, np.bool_)
    ):
        raise ValueError(f"states must be numeric, got dtype {X.dtype}")
    X = X.astype(np.complex128, copy=False)
    if X.ndim < 2:
        raise ValueError(
            f"expected a batch of states with shape (n_samples, n_1, ..., n_r), got {X.shape}"
        )
    if X.shape[0] == 0 or 0 in X.shape[1:]:
        raise ValueError(f"empty batch or axis in shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError("states contain NaN or infinity")
    if state_shape is not None and X.shape[1:] != tuple(state_shape):
        raise ValueError(f"states have shape {X.shape[1:]}, fitted on {tuple(state_shape)}")
    return X


def parse_shape(text):
    """``"2,2,3"`` -> ``(2, 2, 3)``."""
    try:
        shape = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"shape must be comma-separated integers, got {text!r}") from None
    if any(n < 1 for n in shape):
        raise ValueError(f"shape entries must be positive, got {text!r}")
    return shape
