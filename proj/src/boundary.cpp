#include "affinetile/boundary.hpp"

#include <algorithm>
#include <sstream>

namespace tiling {

Word reduce(Word w) {
  Word out;
  for (int x : w) {
    if (x == 0) throw input_error("zero is not a letter");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(std::move(out));
}

namespace {

int letter_from_char(char c, size_t num_letters) {
  if (c >= 'a' && c < static_cast<char>('a' + num_letters)) return c - 'a' + 1;
  if (c >= 'A' && c < static_cast<char>('A' + num_letters)) return -(c - 'A' + 1);
  throw input_error(std::string("unknown letter '") + c + "'");
}

}  // namespace

Word parse_word(const std::string& s, size_t num_letters) {
  Word w;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ') {
      ++i;
    } else if (c == '[') {
      if (i + 4 >= s.size() || s[i + 2] != ',' || s[i + 4] != ']')
        throw input_error("malformed commutator, expected [x,y]");
      int x = letter_from_char(s[i + 1], num_letters);
      int y = letter_from_char(s[i + 3], num_letters);
      w.push_back(x);
      w.push_back(y);
      w.push_back(-x);
      w.push_back(-y);
      i += 5;
    } else {
      w.push_back(letter_from_char(c, num_letters));
      ++i;
    }
  }
  return reduce(std::move(w));
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (int x : w) s += static_cast<char>((x > 0 ? 'a' : 'A') + std::abs(x) - 1);
  return s.empty() ? "1" : s;
}

std::vector<Int> abelianization(const Word& w, size_t num_letters) {
  std::vector<Int> counts(num_letters, Int(0));
  for (int x : w) {
    size_t idx = std::abs(x) - 1;
    if (idx >= num_letters) throw input_error("letter out of range");
    counts[idx] += x > 0 ? 1 : -1;
  }
  return counts;
}

Word apply_endo(const Endomorphism& psi, const Word& w, size_t budget) {
  Word out;
  for (int x : w) {
    size_t idx = std::abs(x) - 1;
    if (idx >= psi.images.size()) throw input_error("endomorphism undefined on a letter");
    const Word& img = psi.images[idx];
    Word piece = x > 0 ? img : inverse_word(img);
    if (out.size() + piece.size() > budget)
      throw math_error("word length budget exceeded (" + std::to_string(budget) + " letters)");
    for (int y : piece) {
      if (!out.empty() && out.back() == -y)
        out.pop_back();
      else
        out.push_back(y);
    }
  }
  return out;
}

IntMat endo_matrix(const Endomorphism& psi) {
  size_t n = psi.num_letters();
  IntMat m(n, n);
  for (size_t j = 0; j < n; ++j) {
    std::vector<Int> ab = abelianization(psi.images[j], n);
    for (size_t i = 0; i < n; ++i) m(i, j) = ab[i];
  }
  return m;
}

namespace {

// exact sum of signed letter vectors
std::vector<FieldElem> word_sum(const VectorAssignment& assign, const Word& w) {
  std::vector<FieldElem> sum(assign.num_coords(), FieldElem(0));
  for (int x : w) {
    size_t idx = std::abs(x) - 1;
    if (idx >= assign.vectors.size()) throw input_error("letter has no vector");
    for (size_t i = 0; i < sum.size(); ++i) {
      if (x > 0)
        sum[i] += assign.vectors[idx][i];
      else
        sum[i] -= assign.vectors[idx][i];
    }
  }
  return sum;
}

bool all_zero(const std::vector<FieldElem>& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem& e) { return e.is_zero(); });
}

}  // namespace

bool check_compatibility(const VectorAssignment& assign, const Endomorphism& psi) {
  for (size_t j = 0; j < psi.num_letters(); ++j) {
    std::vector<FieldElem> lhs = word_sum(assign, psi.images[j]);
    std::vector<FieldElem> rhs = assign.expansion * assign.vectors[j];
    for (size_t i = 0; i < lhs.size(); ++i)
      if (!(lhs[i] == rhs[i])) return false;
  }
  return true;
}

bool is_closed(const VectorAssignment& assign, const Word& w) {
  return all_zero(word_sum(assign, w));
}

std::vector<std::pair<double, double>> boundary_curve(const VectorAssignment& assign,
                                                      const Endomorphism& psi, const Word& w,
                                                      int iters, size_t budget) {
  if (iters < 0) throw input_error("iteration count must be nonnegative");
  if (!is_closed(assign, w)) throw math_error("word is not closed (abelianized vector nonzero)");
  Word cur = reduce(w);
  for (int i = 0; i < iters; ++i) cur = apply_endo(psi, cur, budget);

  Mat<FieldElem> scale = mat_pow(inverse(assign.expansion), static_cast<unsigned long>(iters));
  size_t m = assign.num_coords();
  std::vector<FieldElem> pos(m, FieldElem(0));
  std::vector<std::pair<double, double>> pts;
  auto emit = [&](const std::vector<FieldElem>& p) {
    std::vector<FieldElem> scaled = scale * p;
    std::vector<double> axes;
    for (size_t i = 0; i < m; ++i) {
      ComplexInterval ci = embed(scaled[i], assign.coord_slots[i], 64);
      axes.push_back(to_double(ci.re.mid()));
      if (!assign.slot_real(i)) axes.push_back(to_double(ci.im.mid()));
    }
    pts.emplace_back(axes.size() > 0 ? axes[0] : 0.0, axes.size() > 1 ? axes[1] : 0.0);
  };
  emit(pos);
  for (int x : cur) {
    size_t idx = std::abs(x) - 1;
    for (size_t i = 0; i < m; ++i) {
      if (x > 0)
        pos[i] += assign.vectors[idx][i];
      else
        pos[i] -= assign.vectors[idx][i];
    }
    emit(pos);
  }
  if (!all_zero(pos)) throw math_error("boundary path failed to close exactly");
  return pts;
}

std::string svg_document(const std::vector<std::vector<std::pair<double, double>>>& polylines) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& line : polylines)
    for (const auto& [x, y] : line) {
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  double w = xmax - xmin, h = ymax - ymin;
  if (w == 0) w = 1;
  if (h == 0) h = 1;
  double mx = 0.05 * w, my = 0.05 * h;
  double diag = std::sqrt(w * w + h * h);
  std::ostringstream out;
  out.precision(8);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin - mx << " " << ymin - my
      << " " << w + 2 * mx << " " << h + 2 * my << "\">\n";
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  for (size_t i = 0; i < polylines.size(); ++i) {
    const auto& line = polylines[i];
    if (line.empty()) continue;
    out << "<path fill=\"none\" stroke=\"" << colors[i % 6] << "\" stroke-width=\""
        << 0.002 * diag << "\" d=\"M";
    for (const auto& [x, y] : line) out << " " << x << " " << y;
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tiling
