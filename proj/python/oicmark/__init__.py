"""DCT originality watermarking for RGB medical images.

Images are ``numpy.uint8`` arrays of shape (height, width, 3) in RGB order.
"""

from ._core import (
    TOLERANCE_FLOOR,
    Verdict,
    __version__,
    attack,
    attack_spec,
    dct2,
    default_tolerance,
    derive_key,
    embed,
    entropy,
    idct2,
    mae,
    metrics,
    mse,
    presets,
    psnr,
    ssim,
    uiqi,
    verify,
)

__all__ = [
    "TOLERANCE_FLOOR",
    "Verdict",
    "__version__",
    "attack",
    "attack_spec",
    "dct2",
    "default_tolerance",
    "derive_key",
    "embed",
    "entropy",
    "idct2",
    "mae",
    "metrics",
    "mse",
    "presets",
    "psnr",
    "ssim",
    "uiqi",
    "verify",
]
