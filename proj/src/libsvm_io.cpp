#include "dfw/libsvm_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dfw {

namespace {

double parse_double(const std::string& tok, int line_no, const char* what) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || errno == ERANGE)
    throw ParseError("libsvm line " + std::to_string(line_no) + ": bad " + what + " '" + tok +
                     "'");
  return v;
}

}  // namespace

LibsvmData load_libsvm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);

  std::vector<std::vector<int>> all_idx;
  std::vector<std::vector<double>> all_val;
  std::vector<double> labels;
  int max_index = 0;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // strip comments and blank lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;

    labels.push_back(parse_double(tok, line_no, "label"));
    std::vector<int> idx;
    std::vector<double> val;
    while (ls >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw ParseError("libsvm line " + std::to_string(line_no) + ": expected idx:val, got '" +
                         tok + "'");
      double raw_idx = parse_double(tok.substr(0, colon), line_no, "index");
      int one_based = static_cast<int>(raw_idx);
      if (one_based < 1 || raw_idx != one_based)
        throw ParseError("libsvm line " + std::to_string(line_no) + ": bad index '" +
                         tok.substr(0, colon) + "'");
      if (!idx.empty() && one_based - 1 <= idx.back())
        throw ParseError("libsvm line " + std::to_string(line_no) +
                         ": indices must be strictly increasing");
      idx.push_back(one_based - 1);
      val.push_back(parse_double(tok.substr(colon + 1), line_no, "value"));
      max_index = std::max(max_index, one_based);
    }
    all_idx.push_back(std::move(idx));
    all_val.push_back(std::move(val));
  }
  if (labels.empty()) throw ParseError(path + ": no examples");

  std::vector<Column> cols;
  cols.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    cols.push_back(Column::sparse(max_index, std::move(all_idx[i]), std::move(all_val[i])));
  return LibsvmData{AtomMatrix(max_index, std::move(cols)), std::move(labels)};
}

void write_libsvm(const std::string& path, const AtomMatrix& atoms,
                  const std::vector<double>& labels) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out.precision(17);
  for (int j = 0; j < atoms.count(); ++j) {
    out << (j < static_cast<int>(labels.size()) ? labels[j] : 0.0);
    const Column& c = atoms.col(j);
    if (c.is_dense()) {
      for (int i = 0; i < c.dim(); ++i)
        if (c.dense_values()[i] != 0.0) out << ' ' << (i + 1) << ':' << c.dense_values()[i];
    } else {
      for (std::size_t k = 0; k < c.sparse_indices().size(); ++k)
        out << ' ' << (c.sparse_indices()[k] + 1) << ':' << c.sparse_values()[k];
    }
    out << '\n';
  }
}

AtomMatrix transpose(const AtomMatrix& atoms) {
  int d = atoms.dim();
  int n = atoms.count();
  std::vector<std::vector<int>> idx(d);
  std::vector<std::vector<double>> val(d);
  for (int j = 0; j < n; ++j) {
    const Column& c = atoms.col(j);
    if (c.is_dense()) {
      for (int i = 0; i < d; ++i) {
        if (c.dense_values()[i] != 0.0) {
          idx[i].push_back(j);
          val[i].push_back(c.dense_values()[i]);
        }
      }
    } else {
      for (std::size_t k = 0; k < c.sparse_indices().size(); ++k) {
        idx[c.sparse_indices()[k]].push_back(j);
        val[c.sparse_indices()[k]].push_back(c.sparse_values()[k]);
      }
    }
  }
  std::vector<Column> cols;
  cols.reserve(d);
  for (int i = 0; i < d; ++i) cols.push_back(Column::sparse(n, std::move(idx[i]), std::move(val[i])));
  return AtomMatrix(n, std::move(cols));
}

}  // namespace dfw
