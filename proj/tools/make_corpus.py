#!/usr/bin/env python3
"""Regenerate the bundled evaluation corpus under corpus/.

All images are procedurally rendered, medical-style scenes (radiograph,
fundus, histology, endoscopy, dermoscopy, fluorescence) plus two synthetic
gradient/noise fields. Output is deterministic for a given numpy version.
"""
import argparse
import pathlib

import numpy as np
from PIL import Image
from scipy import ndimage


def smooth_field(rng, shape, sigma, lo, hi):
    f = ndimage.gaussian_filter(rng.standard_normal(shape), sigma)
    f = (f - f.min()) / (f.max() - f.min() + 1e-12)
    return lo + (hi - lo) * f


def finish(rgb, rng, grain, lo=12.0, hi=238.0):
    rgb = rgb + rng.normal(0.0, grain, rgb.shape)
    return np.clip(np.rint(rgb), lo, hi).astype(np.uint8)


def grid(h, w):
    y, x = np.mgrid[0:h, 0:w].astype(float)
    return y / h, x / w


def radiograph(rng, h=472, w=499):
    y, x = grid(h, w)
    base = 48 + 10 * smooth_field(rng, (h, w), 30, 0, 1)
    torso = np.exp(-(((x - 0.5) / 0.42) ** 6 + ((y - 0.55) / 0.55) ** 6))
    lungs = sum(np.exp(-(((x - cx) / 0.15) ** 2 + ((y - 0.48) / 0.28) ** 2) * 2.0)
                for cx in (0.33, 0.67))
    ribs = 0.5 + 0.5 * np.sin(2 * np.pi * (y * 9 + 0.6 * np.abs(x - 0.5)))
    spine = np.exp(-((x - 0.5) / 0.035) ** 2) * (y > 0.1)
    g = base + 120 * torso - 70 * lungs * torso + 28 * ribs * torso * (lungs > 0.2) + 60 * spine
    g = np.clip(g, 20, 225)
    rgb = np.stack([g * 1.0, g * 0.98 + 3, g * 0.93 + 10], axis=-1)
    return finish(rgb, rng, 3.0)


def fundus(rng, h=459, w=442):
    y, x = grid(h, w)
    r = np.hypot((x - 0.5) * w / h, y - 0.5)
    disk = 1.0 / (1.0 + np.exp((r - 0.46) / 0.012))
    tex = smooth_field(rng, (h, w), 6, -1, 1)
    red = 40 + disk * (150 + 25 * tex - 60 * r)
    green = 28 + disk * (70 + 15 * tex - 30 * r)
    blue = 24 + disk * (30 + 8 * tex)
    od = np.exp(-(((x - 0.68) / 0.07) ** 2 + ((y - 0.47) / 0.075) ** 2))
    red += 45 * od
    green += 110 * od
    blue += 60 * od
    vessels = np.zeros((h, w))
    for _ in range(9):
        ang = rng.uniform(0, 2 * np.pi)
        t = np.linspace(0, 0.45, 400)
        wob = 0.05 * np.sin(t * rng.uniform(8, 20) + rng.uniform(0, 6))
        py = 0.47 + t * np.sin(ang + wob)
        px = 0.68 + t * np.cos(ang + wob) * h / w
        ok = (py > 0) & (py < 1) & (px > 0) & (px < 1)
        vessels[(py[ok] * h).astype(int), (px[ok] * w).astype(int)] = 1.0
    vessels = np.clip(ndimage.gaussian_filter(vessels, 2.0) * 12, 0, 1) * disk
    red -= 55 * vessels
    green -= 30 * vessels
    return finish(np.stack([red, green, blue], -1), rng, 2.5)


def histology(rng, h=480, w=512):
    eos = smooth_field(rng, (h, w), 5, 0, 1)
    red = 205 - 40 * eos
    green = 170 - 80 * eos
    blue = 200 - 30 * eos
    nuclei = np.zeros((h, w))
    for _ in range(140):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        ry, rx = rng.uniform(4, 11), rng.uniform(4, 11)
        y0, y1 = int(max(cy - ry - 2, 0)), int(min(cy + ry + 2, h))
        x0, x1 = int(max(cx - rx - 2, 0)), int(min(cx + rx + 2, w))
        yy, xx = np.mgrid[y0:y1, x0:x1]
        nuclei[y0:y1, x0:x1] = np.maximum(
            nuclei[y0:y1, x0:x1], (((yy - cy) / ry) ** 2 + ((xx - cx) / rx) ** 2 < 1).astype(float))
    nuclei = ndimage.gaussian_filter(nuclei, 1.2)
    red -= 120 * nuclei
    green -= 95 * nuclei
    blue -= 35 * nuclei
    return finish(np.stack([red, green, blue], -1), rng, 4.0)


def endoscopy(rng, h=480, w=640):
    y, x = grid(h, w)
    r = np.hypot((x - 0.5) * w / h, y - 0.5)
    vign = np.clip(1.15 - 1.2 * r, 0.25, 1.0)
    folds = smooth_field(rng, (h, w), 18, 0, 1)
    fine = smooth_field(rng, (h, w), 3, -1, 1)
    red = (60 + 120 * folds + 10 * fine) * vign + 28
    green = (40 + 80 * folds + 6 * fine) * vign + 12
    blue = (35 + 60 * folds + 5 * fine) * vign + 12
    spec = smooth_field(rng, (h, w), 4, 0, 1) > 0.93
    spec = ndimage.gaussian_filter(spec.astype(float), 1.5)
    red += 25 * spec
    green += 110 * spec
    blue += 120 * spec
    return finish(np.stack([red, green, blue], -1), rng, 2.0)


def dermoscopy(rng, h=400, w=600):
    y, x = grid(h, w)
    skin = smooth_field(rng, (h, w), 25, 0, 1)
    red = 200 + 15 * skin
    green = 150 + 15 * skin
    blue = 130 + 12 * skin
    r = np.hypot((x - 0.52) * w / h / 1.2, (y - 0.5))
    edge = smooth_field(rng, (h, w), 20, -0.06, 0.06)
    lesion = 1.0 / (1.0 + np.exp((r - 0.28 - edge) / 0.02))
    pig = smooth_field(rng, (h, w), 4, 0, 1)
    red -= lesion * (90 + 50 * pig)
    green -= lesion * (80 + 45 * pig)
    blue -= lesion * (60 + 40 * pig)
    hair = np.zeros((h, w))
    for _ in range(12):
        t = np.linspace(0, 1, 800)
        y0, x0 = rng.uniform(0, 1, 2)
        ang = rng.uniform(0, np.pi)
        bend = rng.uniform(-0.2, 0.2)
        py = y0 + 0.5 * t * np.sin(ang) + bend * t * t
        px = x0 + 0.5 * t * np.cos(ang)
        ok = (py > 0) & (py < 1) & (px > 0) & (px < 1)
        hair[(py[ok] * h).astype(int), (px[ok] * w).astype(int)] = 1.0
    hair = np.clip(ndimage.gaussian_filter(hair, 0.8) * 4, 0, 1)
    red -= 90 * hair
    green -= 80 * hair
    blue -= 60 * hair
    return finish(np.stack([red, green, blue], -1), rng, 3.0)


def fluorescence(rng, h=288, w=348):
    red = smooth_field(rng, (h, w), 30, 34, 48)
    green = smooth_field(rng, (h, w), 30, 30, 42)
    blue = smooth_field(rng, (h, w), 30, 36, 52)
    for _ in range(45):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        s = rng.uniform(6, 16)
        yy, xx = np.mgrid[0:h, 0:w]
        blob = np.exp(-(((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * s * s)))
        green += rng.uniform(60, 140) * blob
        red += rng.uniform(20, 110) * blob * (rng.uniform() < 0.6)
        blue += rng.uniform(40, 120) * np.exp(-(((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * (s / 2.5) ** 2)))
    return finish(np.stack([red, green, blue], -1), rng, 3.0, hi=232.0)


def gradient_noise(rng, h=360, w=480):
    y, x = grid(h, w)
    red = 30 + 170 * (0.5 + 0.5 * np.sin(2 * np.pi * (2.5 * x + 1.5 * y)))
    green = 220 - 190 * (0.5 * x + 0.5 * (1 - y))
    blue = 60 + 120 * (0.5 + 0.5 * np.sin(2 * np.pi * (x + y)))
    return finish(np.stack([red, green, blue], -1), rng, 4.0, lo=14.0, hi=236.0)


def smooth_noise(rng, h=320, w=400):
    rgb = np.stack([smooth_field(rng, (h, w), s, lo, hi)
                    for s, lo, hi in ((4, 30, 150), (7, 40, 215), (11, 60, 220))], -1)
    return finish(rgb, rng, 1.5)


SCENES = {
    "radiograph": radiograph,
    "fundus": fundus,
    "histology": histology,
    "endoscopy": endoscopy,
    "dermoscopy": dermoscopy,
    "fluorescence": fluorescence,
    "gradient_noise": gradient_noise,
    "smooth_noise": smooth_noise,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "corpus"))
    ap.add_argument("--seed", type=int, default=20200624)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for i, (name, fn) in enumerate(SCENES.items()):
        rng = np.random.default_rng(args.seed + i)
        img = fn(rng)
        Image.fromarray(img, "RGB").save(out / f"{name}.png", optimize=True)
        print(f"{name}.png {img.shape[0]}x{img.shape[1]}")


if __name__ == "__main__":
    main()
