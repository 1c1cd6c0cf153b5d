// SPDX-License-Identifier: Apache-2.0

#include "ceig/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace ceig::io
{

using nlohmann::json;

namespace
{

constexpr char kMagic[4] = {'C', 'E', 'Q', 'D'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream &out, std::uint32_t v)
{
  out.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

void write_u64(std::ostream &out, std::uint64_t v)
{
  out.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

void write_f64(std::ostream &out, double v)
{
  out.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

std::uint32_t read_u32(std::istream &in)
{
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char *>(&v), sizeof(v));
  return v;
}

std::uint64_t read_u64(std::istream &in)
{
  std::uint64_t v = 0;
  in.read(reinterpret_cast<char *>(&v), sizeof(v));
  return v;
}

double read_f64(std::istream &in)
{
  double v = 0;
  in.read(reinterpret_cast<char *>(&v), sizeof(v));
  return v;
}

// Row-major complex payload.
void write_matrix(std::ostream &out, const Matrix &m)
{
  for (int i = 0; i < m.rows(); i++)
  {
    for (int j = 0; j < m.cols(); j++)
    {
      write_f64(out, m(i, j).real());
      write_f64(out, m(i, j).imag());
    }
  }
}

Matrix read_matrix(std::istream &in, int rows, int cols)
{
  Matrix m(rows, cols);
  for (int i = 0; i < rows; i++)
  {
    for (int j = 0; j < cols; j++)
    {
      double re = read_f64(in);
      double im = read_f64(in);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

json complex_to_json(Complex z)
{
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json &j)
{
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json matrix_to_json(const Matrix &m)
{
  json rows = json::array();
  for (int i = 0; i < m.rows(); i++)
  {
    json row = json::array();
    for (int j = 0; j < m.cols(); j++)
    {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json &j)
{
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (int i = 0; i < rows; i++)
  {
    for (int k = 0; k < cols; k++)
    {
      m(i, k) = complex_from_json(j.at(i).at(k));
    }
  }
  return m;
}

json contour_to_json(const Contour &c)
{
  json j;
  switch (c.kind)
  {
    case ContourKind::Circle:
      j["kind"] = "circle";
      j["center"] = complex_to_json(c.center);
      j["radius"] = c.radius;
      break;
    case ContourKind::Ellipse:
      j["kind"] = "ellipse";
      j["center"] = complex_to_json(c.center);
      j["semi_axes"] = json::array({c.semi_axis_re, c.semi_axis_im});
      break;
    case ContourKind::Custom:
      j["kind"] = "custom";
      break;
  }
  json nodes = json::array(), weights = json::array();
  for (Complex z : c.nodes)
  {
    nodes.push_back(complex_to_json(z));
  }
  for (Complex w : c.weights)
  {
    weights.push_back(complex_to_json(w));
  }
  j["N"] = c.node_count();
  j["nodes"] = std::move(nodes);
  j["weights"] = std::move(weights);
  return j;
}

Contour contour_from_json(const json &j)
{
  std::string kind = j.at("kind").get<std::string>();
  int n = j.at("N").get<int>();
  if (kind == "circle")
  {
    return build_contour_circle(complex_from_json(j.at("center")),
                                j.at("radius").get<double>(), n);
  }
  if (kind == "ellipse")
  {
    return build_contour_ellipse(complex_from_json(j.at("center")),
                                 j.at("semi_axes").at(0).get<double>(),
                                 j.at("semi_axes").at(1).get<double>(), n);
  }
  std::vector<Complex> nodes, weights;
  for (const auto &z : j.at("nodes"))
  {
    nodes.push_back(complex_from_json(z));
  }
  for (const auto &w : j.at("weights"))
  {
    weights.push_back(complex_from_json(w));
  }
  return build_contour_custom(std::move(nodes), std::move(weights));
}

}  // namespace

void save_quadrature_data(const QuadratureData &data, const std::filesystem::path &path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out.write(kMagic, 4);
  write_u32(out, kVersion);
  write_u64(out, static_cast<std::uint64_t>(data.dim()));
  write_u64(out, static_cast<std::uint64_t>(data.left_count()));
  write_u64(out, static_cast<std::uint64_t>(data.right_count()));
  write_u64(out, static_cast<std::uint64_t>(data.node_count()));

  // contour descriptor
  write_u32(out, static_cast<std::uint32_t>(data.contour.kind));
  write_f64(out, data.contour.center.real());
  write_f64(out, data.contour.center.imag());
  write_f64(out, data.contour.radius);
  write_f64(out, data.contour.semi_axis_re);
  write_f64(out, data.contour.semi_axis_im);
  for (int k = 0; k < data.contour.node_count(); k++)
  {
    write_f64(out, data.contour.nodes[k].real());
    write_f64(out, data.contour.nodes[k].imag());
    write_f64(out, data.contour.weights[k].real());
    write_f64(out, data.contour.weights[k].imag());
  }

  write_u64(out, data.probes.seed);
  for (const Matrix &slab : data.ql)
  {
    write_matrix(out, slab);
  }
  for (const Matrix &slab : data.qr)
  {
    write_matrix(out, slab);
  }
  write_matrix(out, data.probes.left);
  write_matrix(out, data.probes.right);
  if (!out)
  {
    throw std::runtime_error("write failed for " + path.string());
  }
}

QuadratureData load_quadrature_data(const std::filesystem::path &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw std::runtime_error("cannot open " + path.string());
  }
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != std::string(kMagic, 4))
  {
    throw std::runtime_error(path.string() + " is not a CEQD container");
  }
  std::uint32_t version = read_u32(in);
  if (version != kVersion)
  {
    throw std::runtime_error("unsupported CEQD version " + std::to_string(version));
  }
  const int n = static_cast<int>(read_u64(in));
  const int l = static_cast<int>(read_u64(in));
  const int r = static_cast<int>(read_u64(in));
  const int big_n = static_cast<int>(read_u64(in));

  QuadratureData data;
  auto kind = static_cast<ContourKind>(read_u32(in));
  double cre = read_f64(in), cim = read_f64(in);
  double radius = read_f64(in);
  double sa = read_f64(in), sb = read_f64(in);
  std::vector<Complex> nodes(big_n), weights(big_n);
  for (int k = 0; k < big_n; k++)
  {
    double nre = read_f64(in), nim = read_f64(in);
    double wre = read_f64(in), wim = read_f64(in);
    nodes[k] = Complex(nre, nim);
    weights[k] = Complex(wre, wim);
  }
  switch (kind)
  {
    case ContourKind::Circle:
      data.contour = build_contour_circle(Complex(cre, cim), radius, big_n);
      break;
    case ContourKind::Ellipse:
      data.contour = build_contour_ellipse(Complex(cre, cim), sa, sb, big_n);
      break;
    case ContourKind::Custom:
      data.contour = build_contour_custom(nodes, weights);
      break;
  }

  data.probes.seed = read_u64(in);
  data.ql.resize(big_n);
  data.qr.resize(big_n);
  for (int k = 0; k < big_n; k++)
  {
    data.ql[k] = read_matrix(in, l, n);
  }
  for (int k = 0; k < big_n; k++)
  {
    data.qr[k] = read_matrix(in, n, r);
  }
  data.probes.left = read_matrix(in, n, l);
  data.probes.right = read_matrix(in, n, r);
  if (!in)
  {
    throw std::runtime_error("truncated CEQD container: " + path.string());
  }
  return data;
}

void save_quadrature_data_json(const QuadratureData &data,
                               const std::filesystem::path &path)
{
  json j;
  j["magic"] = "CEQD";
  j["version"] = kVersion;
  j["n"] = data.dim();
  j["l"] = data.left_count();
  j["r"] = data.right_count();
  j["N"] = data.node_count();
  j["contour"] = contour_to_json(data.contour);
  j["seed"] = data.probes.seed;
  json ql = json::array(), qr = json::array();
  for (const Matrix &slab : data.ql)
  {
    ql.push_back(matrix_to_json(slab));
  }
  for (const Matrix &slab : data.qr)
  {
    qr.push_back(matrix_to_json(slab));
  }
  j["ql"] = std::move(ql);
  j["qr"] = std::move(qr);
  j["probe_left"] = matrix_to_json(data.probes.left);
  j["probe_right"] = matrix_to_json(data.probes.right);
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << j.dump(1) << "\n";
}

QuadratureData load_quadrature_data_json(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw std::runtime_error("cannot open " + path.string());
  }
  json j = json::parse(in);
  if (j.value("magic", "") != "CEQD")
  {
    throw std::runtime_error(path.string() + " is not a CEQD JSON container");
  }
  QuadratureData data;
  data.contour = contour_from_json(j.at("contour"));
  data.probes.seed = j.value("seed", 0ull);
  for (const auto &slab : j.at("ql"))
  {
    data.ql.push_back(matrix_from_json(slab));
  }
  for (const auto &slab : j.at("qr"))
  {
    data.qr.push_back(matrix_from_json(slab));
  }
  data.probes.left = matrix_from_json(j.at("probe_left"));
  data.probes.right = matrix_from_json(j.at("probe_right"));
  return data;
}

std::string format_double(double x)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_eigenvalues_csv(const EigenSolution &solution, const std::filesystem::path &path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << "index,re_lambda,im_lambda,residual\n";
  for (std::size_t j = 0; j < solution.eigenvalues.size(); j++)
  {
    out << j << "," << format_double(solution.eigenvalues[j].real()) << ","
        << format_double(solution.eigenvalues[j].imag()) << ",";
    if (j < solution.residuals.size())
    {
      out << format_double(solution.residuals[j]);
    }
    out << "\n";
  }
}

void write_residuals_csv(const EigenSolution &solution, const std::filesystem::path &path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << "index,residual,relative_residual\n";
  for (std::size_t j = 0; j < solution.residuals.size(); j++)
  {
    out << j << "," << format_double(solution.residuals[j]) << ",";
    if (j < solution.relative_residuals.size())
    {
      out << format_double(solution.relative_residuals[j]);
    }
    out << "\n";
  }
}

void write_singular_values_csv(const SingularValueReport &report,
                               const std::filesystem::path &path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << "index,sigma,gap_ratio\n";
  for (std::size_t k = 0; k < report.values.size(); k++)
  {
    out << (k + 1) << "," << format_double(report.values[k]) << ",";
    if (k < report.gap_ratios.size())
    {
      out << format_double(report.gap_ratios[k]);
    }
    out << "\n";
  }
}

void write_filter_profile_csv(const FilterProfile &profile,
                              const std::filesystem::path &path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << "re_z,im_z,re_b,im_b,abs_b\n";
  for (std::size_t k = 0; k < profile.grid.size(); k++)
  {
    out << format_double(profile.grid[k].real()) << ","
        << format_double(profile.grid[k].imag()) << ","
        << format_double(profile.values[k].real()) << ","
        << format_double(profile.values[k].imag()) << ","
        << format_double(std::abs(profile.values[k])) << "\n";
  }
}

void save_modal_rom(const ModalRom &rom, const std::filesystem::path &path)
{
  json j;
  j["schema"] = 1;
  j["n_outputs"] = rom.c_factors.rows();
  j["n_inputs"] = rom.b_factors.rows();
  json terms = json::array();
  for (int k = 0; k < rom.order(); k++)
  {
    json term;
    term["pole"] = complex_to_json(rom.poles[k]);
    json c = json::array(), b = json::array();
    for (int i = 0; i < rom.c_factors.rows(); i++)
    {
      c.push_back(complex_to_json(rom.c_factors(i, k)));
    }
    for (int i = 0; i < rom.b_factors.rows(); i++)
    {
      b.push_back(complex_to_json(rom.b_factors(i, k)));
    }
    term["c"] = std::move(c);
    term["b"] = std::move(b);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << j.dump(1) << "\n";
}

ModalRom load_modal_rom(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw std::runtime_error("cannot open " + path.string());
  }
  json j = json::parse(in);
  ModalRom rom;
  const int n_out = j.at("n_outputs").get<int>();
  const int n_in = j.at("n_inputs").get<int>();
  const auto &terms = j.at("terms");
  rom.c_factors.resize(n_out, static_cast<int>(terms.size()));
  rom.b_factors.resize(n_in, static_cast<int>(terms.size()));
  int k = 0;
  for (const auto &term : terms)
  {
    rom.poles.push_back(complex_from_json(term.at("pole")));
    for (int i = 0; i < n_out; i++)
    {
      rom.c_factors(i, k) = complex_from_json(term.at("c").at(i));
    }
    for (int i = 0; i < n_in; i++)
    {
      rom.b_factors(i, k) = complex_from_json(term.at("b").at(i));
    }
    k++;
  }
  return rom;
}

void save_pencil_json(const SinglePointPencil &pencil, const std::filesystem::path &path)
{
  json j;
  j["sigma"] = complex_to_json(pencil.sigma);
  j["K"] = pencil.block_count;
  j["lmat"] = matrix_to_json(pencil.lmat);
  j["l0"] = matrix_to_json(pencil.l0);
  j["ls"] = matrix_to_json(pencil.ls);
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << j.dump(1) << "\n";
}

}  // namespace ceig::io
