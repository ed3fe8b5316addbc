#include "wigprop/output.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include <json.hpp>

namespace wigprop {

namespace {

std::ofstream open_out(const std::filesystem::path& path,
                       std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::array<char, 8> to_little_endian(double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  std::array<char, 8> bytes{};
  for (std::size_t i = 0; i < 8; ++i) {
    bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xffu);
  }
  return bytes;
}

double from_little_endian(const char* bytes) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i]))
            << (8 * i);
  }
  return std::bit_cast<double>(bits);
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_raw64(const std::filesystem::path& path, const Field& w) {
  w.require(Representation::XP, "write_raw64");
  std::vector<char> bytes;
  bytes.reserve(w.data().size() * 8);
  for (const auto& v : w.data()) {
    const auto b = to_little_endian(v.real());
    bytes.insert(bytes.end(), b.begin(), b.end());
  }
  auto out = open_out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::vector<double> read_raw64(const std::filesystem::path& path,
                               std::size_t expected_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() != expected_count * 8) {
    throw std::runtime_error(path.string() + ": expected " +
                             std::to_string(expected_count * 8) + " bytes");
  }
  std::vector<double> out(expected_count);
  for (std::size_t i = 0; i < expected_count; ++i) {
    out[i] = from_little_endian(bytes.data() + 8 * i);
  }
  return out;
}

void write_csv(const std::filesystem::path& path, const Field& w) {
  w.require(Representation::XP, "write_csv");
  if (w.data().size() > kMaxCsvCells) {
    throw std::invalid_argument("csv output is limited to 256x256 cells");
  }
  auto out = open_out(path);
  out << "x,p,w\n";
  const auto x = w.grid().x();
  const auto p = w.grid().p();
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      out << g17(x[i]) << ',' << g17(p[j]) << ',' << g17(w(i, j).real())
          << '\n';
    }
  }
}

void write_marginals(const std::filesystem::path& dir, const std::string& stem,
                     const Field& w) {
  const auto m = marginals(w);
  auto ox = open_out(dir / (stem + "_x.csv"));
  ox << "x,rho_x\n";
  for (std::size_t i = 0; i < m.rho_x.size(); ++i) {
    ox << g17(w.grid().x()[i]) << ',' << g17(m.rho_x[i]) << '\n';
  }
  auto op = open_out(dir / (stem + "_p.csv"));
  op << "p,rho_p\n";
  for (std::size_t j = 0; j < m.rho_p.size(); ++j) {
    op << g17(w.grid().p()[j]) << ',' << g17(m.rho_p[j]) << '\n';
  }
}

std::string snapshot_name(std::size_t step, OutputFormat format) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "W_%05zu.%s", step,
                format == OutputFormat::Csv ? "csv" : "raw64");
  return buf;
}

DiagnosticsWriter::DiagnosticsWriter(const std::filesystem::path& path)
    : out_(open_out(path)) {
  out_ << "step,t,total_prob,purity,mean_x,mean_p,energy,min_w,max_im_rel,"
          "boundary_mass,nyquist_rel\n";
}

void DiagnosticsWriter::write(const DiagnosticsRecord& r) {
  out_ << r.step << ',' << g17(r.t) << ',' << g17(r.total_prob) << ','
       << g17(r.purity) << ',' << g17(r.mean_x) << ',' << g17(r.mean_p) << ','
       << g17(r.energy) << ',' << g17(r.min_w) << ',' << g17(r.max_im_rel)
       << ',' << g17(r.boundary_mass) << ',' << g17(r.nyquist_rel) << '\n';
  out_.flush();
}

void write_metadata(const std::filesystem::path& path, const RunConfig& config,
                    const Grid& grid,
                    const std::vector<SnapshotEntry>& snapshots) {
  using nlohmann::json;
  json meta;
  meta["grid"] = {{"nx", grid.nx()},     {"np", grid.np()},
                  {"lx", grid.lx()},     {"lp", grid.lp()},
                  {"dx", grid.dx()},     {"dp", grid.dp()},
                  {"x_first", grid.x().front()},
                  {"p_first", grid.p().front()},
                  {"hbar", grid.hbar()}};
  const bool raw = config.output.format == OutputFormat::Raw64;
  meta["format"] = raw ? "raw64" : "csv";
  meta["layout"] = {{"axes", {"x", "p"}},
                    {"order", "row-major"},
                    {"slow_axis", "x"},
                    {"fast_axis", "p"},
                    {"shape", {grid.nx(), grid.np()}},
                    {"dtype", "float64"},
                    {"endianness", "little"},
                    {"value", "Re W"},
                    {"x_j", "x_first + j*dx"},
                    {"p_k", "p_first + k*dp"}};
  meta["time_units"] = "atomic units";
  json snaps = json::array();
  for (const auto& s : snapshots) {
    snaps.push_back({{"file", s.file}, {"step", s.step}, {"t", s.t}});
  }
  meta["snapshots"] = snaps;
  meta["diagnostics"] = "diagnostics.csv";
  meta["config"] = json::parse(config.echo);
  auto out = open_out(path);
  out << meta.dump(2) << '\n';
}

}  // namespace wigprop
