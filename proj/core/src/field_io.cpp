#include "parityns/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace parityns {

namespace {

using nlohmann::json;

void put_double(std::ofstream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  unsigned char buf[8];
  for (int b = 0; b < 8; ++b) buf[b] = static_cast<unsigned char>(bits >> (8 * b));
  out.write(reinterpret_cast<const char*>(buf), 8);
}

double get_double(const unsigned char* buf) {
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(buf[b]) << (8 * b);
  double v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

}  // namespace

std::size_t raw_component_size(int n, bool half) {
  const std::size_t un = static_cast<std::size_t>(n);
  return half ? un * un * (un / 2 - 1) : un * un * un;
}

void write_raw(const std::string& path, const RawField& f) {
  require_grid_size(f.n);
  const std::size_t expect = raw_component_size(f.n, f.half);
  for (const auto& c : f.comps)
    if (c.size() != expect) throw std::invalid_argument("component size does not match n");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& c : f.comps)
    for (const auto& v : c) {
      put_double(out, v.real());
      put_double(out, v.imag());
    }
  if (!out) throw std::runtime_error("write failed: " + path);

  json meta = {{"n", f.n}, {"components", 3}, {"layout", "x1-fastest"}, {"domain", "torus-2pi"}};
  if (f.half) meta["half"] = "x3-lower";
  std::ofstream side(path + ".json");
  if (!side) throw std::runtime_error("cannot open " + path + ".json for writing");
  side << meta.dump(2) << '\n';
}

RawField read_raw(const std::string& path) {
  std::ifstream side(path + ".json");
  if (!side) throw std::runtime_error("missing sidecar " + path + ".json");
  json meta;
  try {
    side >> meta;
  } catch (const json::exception& e) {
    throw std::runtime_error("bad sidecar " + path + ".json: " + e.what());
  }
  RawField f;
  try {
    f.n = meta.at("n").get<int>();
    if (meta.at("components").get<int>() != 3) throw std::runtime_error("expected 3 components");
    if (meta.at("layout").get<std::string>() != "x1-fastest") throw std::runtime_error("unsupported layout");
    if (meta.at("domain").get<std::string>() != "torus-2pi") throw std::runtime_error("unsupported domain");
    if (meta.contains("half")) {
      if (meta["half"].get<std::string>() != "x3-lower") throw std::runtime_error("unsupported half flag");
      f.half = true;
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("bad sidecar " + path + ".json: " + e.what());
  }
  require_grid_size(f.n);

  const std::size_t per = raw_component_size(f.n, f.half);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() != 3 * per * 16)
    throw std::runtime_error(path + ": expected " + std::to_string(3 * per * 16) + " bytes, found " + std::to_string(bytes.size()));
  const unsigned char* p = bytes.data();
  for (auto& c : f.comps) {
    c.resize(per);
    for (auto& v : c) {
      v = cplx(get_double(p), get_double(p + 8));
      p += 16;
    }
  }
  return f;
}

void write_field(const std::string& path, const VectorField& u) {
  RawField f;
  f.n = u.n();
  for (int l = 0; l < 3; ++l) f.comps[static_cast<std::size_t>(l)] = u[l].values();
  write_raw(path, f);
}

VectorField read_field(const std::string& path) {
  RawField f = read_raw(path);
  if (f.half) throw std::runtime_error(path + " holds half-domain data");
  VectorField u(f.n);
  for (int l = 0; l < 3; ++l) u[l].values() = std::move(f.comps[static_cast<std::size_t>(l)]);
  return u;
}

}  // namespace parityns
