#include "specht/trigonal.hpp"

#include "specht/errors.hpp"

namespace specht {

namespace {

std::string at(std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

}  // namespace

TrigonalCheck verify_trigonal_pairing(const IntMatrix& t, const Int& det) {
  if (!t.is_square()) throw DomainError("pairing table must be square");
  const std::size_t r = t.rows();
  TrigonalCheck res;
  for (std::size_t i = 0; i < r; ++i) {
    const Int& d = t(i, i);
    if (d == 0) {
      res.violation = "(i) zero diagonal entry at " + at(i, i);
      return res;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (t(i, j) != 0) {
        res.violation = "(ii) nonzero entry below the diagonal at " + at(i, j);
        return res;
      }
    for (std::size_t j = i + 1; j < r; ++j)
      if (t(i, j) % d != 0) {
        res.violation = "(iii) diagonal entry does not divide " + at(i, j);
        return res;
      }
    if (i + 1 < r && t(i + 1, i + 1) % d != 0) {
      res.violation = "(iv) diagonal entry " + at(i, i) + " does not divide the next one";
      return res;
    }
  }
  Int prod = 1;
  std::vector<Int> diag;
  for (std::size_t i = 0; i < r; ++i) {
    prod *= t(i, i);
    diag.push_back(abs(t(i, i)));
  }
  if (abs(prod) != abs(det)) {
    res.violation = "(v) diagonal product " + to_decimal(prod) + " differs from the determinant " + to_decimal(det);
    return res;
  }
  res.ok = true;
  res.chain = make_chain(std::move(diag));
  return res;
}

TrigonalCheck verify_trigonal_pairing(std::size_t size, const std::function<Int(std::size_t, std::size_t)>& pairing, const Int& det) {
  IntMatrix t(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) t(i, j) = pairing(i, j);
  return verify_trigonal_pairing(t, det);
}

}  // namespace specht
