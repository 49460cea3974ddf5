#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <limits>

#include "oicmark/attack.hpp"
#include "oicmark/dct.hpp"
#include "oicmark/embed.hpp"
#include "oicmark/key.hpp"
#include "oicmark/metrics.hpp"
#include "oicmark/report.hpp"
#include "oicmark/verify.hpp"

namespace py = pybind11;

namespace {

using Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

oic::RgbImage to_image(const Array& a) {
  if (a.ndim() != 3 || a.shape(2) != 3) throw std::invalid_argument("expected an HxWx3 uint8 array");
  const auto h = static_cast<std::size_t>(a.shape(0));
  const auto w = static_cast<std::size_t>(a.shape(1));
  return oic::RgbImage::from_interleaved(h, w, {a.data(), h * w * 3});
}

Array to_array(const oic::RgbImage& image) {
  const auto rgb = image.to_interleaved();
  Array out({image.height(), image.width(), std::size_t{3}});
  std::memcpy(out.mutable_data(), rgb.data(), rgb.size());
  return out;
}

oic::Strategy strategy_arg(const std::string& s) { return oic::parse_strategy(s); }

py::dict quality_dict(const oic::QualityReport& q) {
  py::dict d;
  d["mse"] = q.mse;
  d["mae"] = q.mae;
  d["psnr"] = q.psnr;
  d["uiqi"] = q.uiqi ? py::cast(*q.uiqi) : py::none();
  d["ssim"] = q.ssim;
  d["entropy"] = q.entropy;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "DCT originality watermarking for RGB medical images";
  m.attr("__version__") = OICMARK_VERSION;
  m.attr("TOLERANCE_FLOOR") = oic::kToleranceFloor;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  m.def("derive_key", [](const std::string& id) {
    const auto k = oic::derive_key(id);
    return py::make_tuple(k.digest_hex, py::bytes(reinterpret_cast<const char*>(k.cipher_key.data()),
                                                  k.cipher_key.size()));
  }, py::arg("device_id"), "SHA-1 hex digest and the 16-byte cipher key for a device ID.");

  m.def("embed", [](const Array& image, const std::string& id, const std::string& strategy) {
    return to_array(oic::embed(to_image(image), id, strategy_arg(strategy)).image);
  }, py::arg("image"), py::arg("device_id"), py::arg("strategy") = "mac");

  py::class_<oic::Verdict>(m, "Verdict")
      .def_readonly("tampered", &oic::Verdict::tampered)
      .def_readonly("flagged_count", &oic::Verdict::flagged_count)
      .def_property_readonly("flagged_blocks", [](const oic::Verdict& v) {
        py::list out;
        for (const auto& b : v.flagged_blocks) out.append(py::make_tuple(b.row, b.col));
        return out;
      })
      .def_property_readonly("boxes", [](const oic::Verdict& v) {
        py::list out;
        for (const auto& b : v.boxes) out.append(py::make_tuple(b.row_first, b.row_last, b.col_first, b.col_last));
        return out;
      });

  m.def("verify", [](const Array& image, const std::string& id, const std::string& strategy,
                     std::optional<double> tolerance, const std::string& model) {
    const auto s = strategy_arg(strategy);
    const auto dm = oic::parse_model(model);
    const auto map = oic::verify(to_image(image), id, s, tolerance.value_or(oic::default_tolerance(s, dm)), dm);
    py::array_t<double> deviation({map.block_rows, map.block_cols});
    auto d = deviation.mutable_unchecked<2>();
    for (std::size_t r = 0; r < map.block_rows; ++r) {
      for (std::size_t c = 0; c < map.block_cols; ++c) d(r, c) = map.at(r, c).deviation;
    }
    return py::make_tuple(oic::summarize(map), deviation);
  }, py::arg("image"), py::arg("device_id"), py::arg("strategy") = "mac", py::arg("tolerance") = py::none(),
     py::arg("model") = "consistency",
     "Returns (Verdict, per-block deviation array). tolerance defaults to the calibrated value.");

  m.def("default_tolerance", [](const std::string& strategy, const std::string& model) {
    return oic::default_tolerance(strategy_arg(strategy), oic::parse_model(model));
  }, py::arg("strategy") = "mac", py::arg("model") = "consistency");

  m.def("attack", [](const Array& image, const std::string& preset, bool clip) {
    const auto img = to_image(image);
    auto spec = oic::find_preset(preset).spec;
    if (clip) {
      auto clipped = oic::clip_to_bounds(spec, img.height(), img.width());
      if (!clipped) throw std::invalid_argument("attack region lies outside the image");
      spec = *clipped;
    }
    return to_array(oic::apply_attack(img, spec));
  }, py::arg("image"), py::arg("preset"), py::arg("clip") = false);

  m.def("attack_spec", [](const Array& image, const std::string& spec_json) {
    return to_array(oic::apply_attack(to_image(image), oic::parse_attack_spec(spec_json)));
  }, py::arg("image"), py::arg("spec_json"));

  m.def("presets", [] {
    py::list out;
    for (const auto& p : oic::attack_presets()) out.append(std::string(p.name));
    return out;
  });

  m.def("metrics", [](const Array& reference, const Array& test) {
    return quality_dict(oic::compare(to_image(reference), to_image(test)));
  }, py::arg("reference"), py::arg("test"));

  m.def("mse", [](const Array& a, const Array& b) { return oic::mse(to_image(a), to_image(b)); });
  m.def("mae", [](const Array& a, const Array& b) { return oic::mae(to_image(a), to_image(b)); });
  m.def("psnr", [](const Array& a, const Array& b) { return oic::psnr(to_image(a), to_image(b)); });
  m.def("ssim", [](const Array& a, const Array& b) { return oic::ssim(to_image(a), to_image(b)); });
  m.def("uiqi", [](const Array& a, const Array& b) { return oic::uiqi(to_image(a), to_image(b)); });
  m.def("entropy", [](const Array& a) { return oic::entropy(to_image(a)); });

  m.def("dct2", [](py::array_t<double, py::array::c_style | py::array::forcecast> block) {
    if (block.ndim() != 2 || block.shape(0) != 8 || block.shape(1) != 8) {
      throw std::invalid_argument("expected an 8x8 array");
    }
    oic::Block8 b;
    std::memcpy(b.data(), block.data(), sizeof b);
    const auto c = oic::dct2_block(b);
    py::array_t<double> out({8, 8});
    std::memcpy(out.mutable_data(), c.values.data(), sizeof c.values);
    return out;
  }, py::arg("block"), "Orthonormal 8x8 DCT-II.");

  m.def("idct2", [](py::array_t<double, py::array::c_style | py::array::forcecast> coeffs) {
    if (coeffs.ndim() != 2 || coeffs.shape(0) != 8 || coeffs.shape(1) != 8) {
      throw std::invalid_argument("expected an 8x8 array");
    }
    oic::CoeffBlock c;
    std::memcpy(c.values.data(), coeffs.data(), sizeof c.values);
    const auto b = oic::idct2_block(c);
    py::array_t<double> out({8, 8});
    std::memcpy(out.mutable_data(), b.data(), sizeof b);
    return out;
  }, py::arg("coeffs"));
}
