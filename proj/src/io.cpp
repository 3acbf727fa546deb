#include "berlab/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

namespace berlab {

namespace {

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::InvalidInput, "complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Matrix matrix_from_json(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw Error(ErrorCode::InvalidInput, "matrix must be a non-empty array of rows");
  const auto n = static_cast<Index>(rows.size());
  Index cols = -1;
  Matrix m;
  for (Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw Error(ErrorCode::InvalidInput, "matrix rows must be arrays");
    if (cols < 0) {
      cols = static_cast<Index>(row.size());
      m.resize(n, cols);
    }
    if (static_cast<Index>(row.size()) != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix");
    for (Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

KernelSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw Error(ErrorCode::InvalidInput, "kernel spec needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  std::vector<Complex> points;
  if (j.contains("points"))
    for (const Json& p : j.at("points")) points.push_back(complex_from_json(p));

  if (kind == "szego") return build_szego(points);
  if (kind == "bergman") return build_bergman(points);
  if (kind == "fock") return build_fock(points);
  if (kind == "gram") {
    if (!j.contains("gram")) throw Error(ErrorCode::InvalidInput, "kind \"gram\" needs a \"gram\" matrix");
    return build_from_gram(matrix_from_json(j.at("gram")), std::move(points));
  }
  throw Error(ErrorCode::InvalidInput, "unknown kernel kind \"" + kind + "\"");
}

Json space_to_json(const KernelSpace& space) {
  Json j;
  const bool analytic = space.kind() == KernelKind::Szego || space.kind() == KernelKind::Bergman ||
                        space.kind() == KernelKind::Fock;
  j["kind"] = analytic ? std::string(to_string(space.kind())) : std::string("gram");
  Json pts = Json::array();
  for (const Complex& z : space.labels()) pts.push_back(complex_to_json(z));
  j["points"] = std::move(pts);
  j["gram"] = matrix_to_json(space.gram() ? *space.gram() : space.induced_gram());
  return j;
}

Operator operator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw Error(ErrorCode::InvalidInput, "operator file needs \"entries\"");
  Matrix m = matrix_from_json(j.at("entries"));
  if (j.contains("dim") && j.at("dim").get<Index>() != m.rows())
    throw Error(ErrorCode::InvalidInput, "\"dim\" does not match the entries");
  return Operator(std::move(m));
}

Json operator_to_json(const Operator& a) {
  Json j;
  j["dim"] = a.dim();
  j["entries"] = matrix_to_json(a.matrix());
  return j;
}

Json params_to_json(const BoundParams& p) {
  Json j = Json::object();
  if (p.theta_star) j["theta_star"] = *p.theta_star;
  if (p.alpha_star) j["alpha_star"] = *p.alpha_star;
  if (p.r) j["r"] = *p.r;
  return j;
}

Json evaluation_to_json(const BoundEvaluation& ev) {
  Json j;
  j["bound_id"] = std::string(to_string(ev.id));
  j["lhs"] = ev.lhs;
  j["rhs"] = ev.rhs;
  j["slack"] = ev.slack;
  j["satisfied"] = ev.satisfied;
  j["params"] = params_to_json(ev.params);
  j["argmax_index"] = ev.argmax_index ? Json(*ev.argmax_index) : Json(nullptr);
  Json sides = Json::array();
  for (const BoundSide& s : ev.sides) {
    Json sj;
    sj["label"] = s.label;
    sj["lhs"] = s.lhs;
    sj["rhs"] = s.rhs;
    sj["slack"] = s.slack;
    sj["satisfied"] = s.satisfied;
    sj["params"] = params_to_json(s.params);
    sides.push_back(std::move(sj));
  }
  j["sides"] = std::move(sides);
  return j;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

void write_shell_csv(std::ostream& out, const std::vector<ShellPoint>& shell) {
  out << "label_re,label_im,symbol_re,symbol_im,image_norm_sq\n";
  for (const ShellPoint& p : shell)
    out << format_double(p.label.real()) << ',' << format_double(p.label.imag()) << ','
        << format_double(p.symbol.real()) << ',' << format_double(p.symbol.imag()) << ','
        << format_double(p.image_norm_sq) << '\n';
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace berlab
