#include "ohcp/io.hpp"

#include "ohcp/errors.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ohcp::io {
namespace {

// Splits the stream into (line number, tokens) records, skipping comments.
std::vector<std::pair<std::size_t, std::vector<std::string>>> records(std::istream& in) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) tokens.push_back(t);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        out.emplace_back(number, std::move(tokens));
    }
    return out;
}

ParseError error_at(std::size_t line, const std::string& what) {
    return ParseError("line " + std::to_string(line) + ": " + what);
}

long long parse_integer(const std::string& t, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw error_at(line, "expected an integer, got '" + t + "'");
    }
}

Integer parse_big_integer(const std::string& t, std::size_t line) {
    std::string s = (!t.empty() && t[0] == '+') ? t.substr(1) : t;
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw error_at(line, "expected an integer, got '" + t + "'");
    return v;
}

std::vector<VertexId> parse_vertices(const std::vector<std::string>& tokens, std::size_t from,
                                     std::size_t line) {
    std::vector<VertexId> v;
    for (std::size_t i = from; i < tokens.size(); ++i) v.push_back(parse_integer(tokens[i], line));
    return v;
}

// Looks up an oriented p-simplex, returning its basis index and orientation sign.
std::pair<std::size_t, int> locate(const SimplicialComplex& k, int p, std::vector<VertexId> vertices,
                                   std::size_t line) {
    if (vertices.size() != static_cast<std::size_t>(p) + 1)
        throw error_at(line, "expected a " + std::to_string(p) + "-simplex");
    int sign = 1;
    Simplex s;
    try {
        s = Simplex::canonical(std::move(vertices), &sign);
    } catch (const InputError& e) {
        throw error_at(line, e.what());
    }
    auto idx = k.index_of(s);
    if (!idx) throw error_at(line, "simplex is not in the complex");
    return {*idx, sign};
}

template <class F>
auto with_file(const std::string& path, F&& read) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return read(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

SimplicialComplex read_complex(std::istream& in) {
    std::vector<Simplex> maximal;
    for (const auto& [line, tokens] : records(in)) {
        try {
            maximal.push_back(Simplex::canonical(parse_vertices(tokens, 0, line)));
        } catch (const InputError& e) {
            throw error_at(line, e.what());
        }
    }
    return build_closure(maximal);
}

Chain read_chain(std::istream& in, const SimplicialComplex& k, int p) {
    Chain c{p, {}};
    for (const auto& [line, tokens] : records(in)) {
        if (tokens.size() < 2) throw error_at(line, "expected 'coeff v0 ... vp'");
        Integer coeff = parse_big_integer(tokens[0], line);
        auto [index, sign] = locate(k, p, parse_vertices(tokens, 1, line), line);
        c.add(index, sign * coeff);
    }
    return c;
}

WeightVector read_weights(std::istream& in, const SimplicialComplex& k, int p) {
    WeightVector w(k.count(p), Rational(1));
    for (const auto& [line, tokens] : records(in)) {
        if (tokens.size() < 2) throw error_at(line, "expected 'num/den v0 ... vp'");
        Rational value;
        try {
            value = parse_rational(tokens[0]);
        } catch (const ParseError& e) {
            throw error_at(line, e.what());
        }
        auto [index, sign] = locate(k, p, parse_vertices(tokens, 1, line), line);
        (void)sign;
        w[index] = value;
    }
    return w;
}

std::map<VertexId, std::vector<Rational>> read_coordinates(std::istream& in) {
    std::map<VertexId, std::vector<Rational>> coords;
    for (const auto& [line, tokens] : records(in)) {
        if (tokens.size() < 2) throw error_at(line, "expected 'vid x1 ... xd'");
        VertexId v = parse_integer(tokens[0], line);
        std::vector<Rational> point;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            try {
                point.push_back(parse_rational(tokens[i]));
            } catch (const ParseError& e) {
                throw error_at(line, e.what());
            }
        }
        if (!coords.emplace(v, std::move(point)).second)
            throw error_at(line, "duplicate vertex " + std::to_string(v));
    }
    return coords;
}

IntMatrix read_matrix(std::istream& in) {
    auto recs = records(in);
    if (recs.empty()) throw ParseError("empty matrix file");
    const auto& [hline, header] = recs.front();
    if (header.size() != 2) throw error_at(hline, "expected 'm n'");
    const long long m = parse_integer(header[0], hline);
    const long long n = parse_integer(header[1], hline);
    if (m < 0 || n < 0) throw error_at(hline, "negative dimension");
    if (recs.size() != static_cast<std::size_t>(m) + 1)
        throw ParseError("expected " + std::to_string(m) + " matrix rows, found " +
                         std::to_string(recs.size() - 1));
    IntMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto& [line, tokens] = recs[i + 1];
        if (tokens.size() != a.cols())
            throw error_at(line, "expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = parse_big_integer(tokens[j], line);
    }
    return a;
}

void write_chain(std::ostream& out, const Chain& c, const SimplicialComplex& k) {
    for (const auto& [index, coeff] : c.coeffs) {
        out << coeff.get_str();
        for (VertexId v : k.simplex(c.dim, index).vertices) out << ' ' << v;
        out << '\n';
    }
}

void write_rational_chain(std::ostream& out, int p, const std::vector<Rational>& values,
                          const SimplicialComplex& k) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) continue;
        out << (values[i].get_den() == 1 ? values[i].get_num().get_str() : to_pq(values[i]));
        for (VertexId v : k.simplex(p, i).vertices) out << ' ' << v;
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const IntMatrix& m) { out << m; }

SimplicialComplex load_complex(const std::string& path) {
    return with_file(path, [](std::istream& in) { return read_complex(in); });
}

Chain load_chain(const std::string& path, const SimplicialComplex& k, int p) {
    return with_file(path, [&](std::istream& in) { return read_chain(in, k, p); });
}

WeightVector load_weights(const std::string& path, const SimplicialComplex& k, int p) {
    return with_file(path, [&](std::istream& in) { return read_weights(in, k, p); });
}

std::map<VertexId, std::vector<Rational>> load_coordinates(const std::string& path) {
    return with_file(path, [](std::istream& in) { return read_coordinates(in); });
}

IntMatrix load_matrix(const std::string& path) {
    return with_file(path, [](std::istream& in) { return read_matrix(in); });
}

}  // namespace ohcp::io
