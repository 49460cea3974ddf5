import math
import os
import pathlib

import numpy as np
import pytest

import oicmark

CORPUS = pathlib.Path(os.environ.get("OICMARK_CORPUS_DIR", pathlib.Path(__file__).parents[2] / "corpus"))


def random_image(seed, h=64, w=72):
    rng = np.random.default_rng(seed)
    return rng.integers(0, 256, size=(h, w, 3), dtype=np.uint8)


def test_derive_key_matches_sha1_vector():
    digest, key = oicmark.derive_key("abc")
    assert digest == "A9993E364706816ABA3E25717850C26C9CD0D89D"
    assert key == b"A9993E364706816A"


def test_embed_keeps_green_blue_and_verifies_clean():
    img = random_image(1, 45, 61)
    for strategy in ("dc", "fac", "mac", "lac"):
        out = oicmark.embed(img, "dev", strategy)
        assert out.shape == img.shape and out.dtype == np.uint8
        assert np.array_equal(out[:, :, 1:], img[:, :, 1:])
        verdict, deviation = oicmark.verify(out, "dev", strategy)
        assert not verdict.tampered
        assert deviation.shape == (6, 8)
        assert deviation.max() < 1e-9


def test_attack_preset_is_detected():
    img = random_image(2, 300, 320)
    marked = oicmark.embed(img, "dev")
    attacked = oicmark.attack(marked, "fig10a")
    assert np.all(attacked[237:241, 299:303, 2] == 255)
    verdict, _ = oicmark.verify(attacked, "dev")
    assert verdict.tampered
    assert any(r0 <= 241 and r1 >= 238 and c0 <= 303 and c1 >= 300 for r0, r1, c0, c1 in verdict.boxes)


def test_attack_spec_and_presets():
    assert len(oicmark.presets()) == 10
    img = random_image(3, 20, 20)
    out = oicmark.attack_spec(img, '{"channel":"red","rows":[1,2],"cols":[3,4],"fill":0}')
    assert np.all(out[0:2, 2:4, 0] == 0)
    with pytest.raises(ValueError):
        oicmark.attack(img, "fig9a")
    clipped = oicmark.attack(random_image(4, 240, 302), "fig10a", clip=True)
    assert clipped[239, 301, 2] == 255


def test_metrics_against_numpy():
    a = random_image(5)
    b = random_image(6)
    mse = np.mean((a.astype(float) - b.astype(float)) ** 2)
    assert oicmark.mse(a, b) == pytest.approx(mse, rel=1e-12)
    assert oicmark.psnr(a, b) == pytest.approx(10 * math.log10(255**2 / mse), rel=1e-12)
    assert oicmark.mae(a, b) == pytest.approx(np.mean(np.abs(a.astype(float) - b.astype(float))), rel=1e-12)
    report = oicmark.metrics(a, a)
    assert report["mse"] == 0 and math.isinf(report["psnr"]) and report["ssim"] == pytest.approx(1.0)
    flat = np.full((8, 8, 3), 7, np.uint8)
    assert oicmark.metrics(flat, flat)["uiqi"] is None
    with pytest.raises(ArithmeticError):
        oicmark.uiqi(flat, flat)


def test_dct_round_trip():
    rng = np.random.default_rng(7)
    block = rng.uniform(0, 255, (8, 8))
    coeffs = oicmark.dct2(block)
    assert coeffs[0, 0] == pytest.approx(8 * block.mean())
    assert np.allclose(oicmark.idct2(coeffs), block, atol=1e-10)


def test_wrong_key_on_corpus_image():
    cv2 = pytest.importorskip("cv2")
    img = cv2.imread(str(CORPUS / "histology.png"))[:, :, ::-1].copy()
    marked = oicmark.embed(img, "scanner-01")
    verdict, deviation = oicmark.verify(marked, "someone-else")
    assert verdict.flagged_count / deviation.size > 0.9


def test_bad_input_shape():
    with pytest.raises(ValueError):
        oicmark.embed(np.zeros((8, 8), np.uint8), "dev")
