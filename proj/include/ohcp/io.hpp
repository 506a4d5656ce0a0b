#pragma once

#include "ohcp/complex.hpp"
#include "ohcp/matrix.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace ohcp::io {

// Text formats. Blank lines and lines starting with '#' are ignored in all
// of them; malformed content raises ParseError naming the line.
//
//   .scx  one maximal simplex per line: "v0 v1 ... vq"
//   .chn  "coeff v0 ... vp"; the coefficient is flipped by the parity of the
//         vertex permutation to ascending order
//   .wts  "num/den v0 ... vp"; simplices not listed get weight 1
//   .xyz  "vid x1 ... xd" with decimal or p/q coordinates
//   .mat  "m n" header, then m rows of n integers

SimplicialComplex read_complex(std::istream& in);
Chain read_chain(std::istream& in, const SimplicialComplex& k, int p);
WeightVector read_weights(std::istream& in, const SimplicialComplex& k, int p);
std::map<VertexId, std::vector<Rational>> read_coordinates(std::istream& in);
IntMatrix read_matrix(std::istream& in);

void write_chain(std::ostream& out, const Chain& c, const SimplicialComplex& k);
/// Rational coefficients in "p/q" form; used for relaxed (non-integral) output.
void write_rational_chain(std::ostream& out, int p, const std::vector<Rational>& values,
                          const SimplicialComplex& k);
void write_matrix(std::ostream& out, const IntMatrix& m);

SimplicialComplex load_complex(const std::string& path);
Chain load_chain(const std::string& path, const SimplicialComplex& k, int p);
WeightVector load_weights(const std::string& path, const SimplicialComplex& k, int p);
std::map<VertexId, std::vector<Rational>> load_coordinates(const std::string& path);
IntMatrix load_matrix(const std::string& path);

}  // namespace ohcp::io
