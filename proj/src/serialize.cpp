#include "aspen/serialize.hpp"

#include <sstream>
#include <vector>

namespace aspen {

namespace {

void emit_rows(std::ostringstream& os, const std::vector<std::vector<int>>& rows) {
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << " ";
            os << row[i];
        }
        os << "\n";
    }
}

template <typename T>
void emit_rows_any(std::ostringstream& os, const std::vector<std::vector<T>>& rows) {
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << " ";
            os << static_cast<int>(row[i]);
        }
        os << "\n";
    }
}

struct TextReader {
    std::istringstream in;
    explicit TextReader(const std::string& text) : in(text) {}

    std::vector<std::string> header(const std::string& keyword, size_t params) {
        std::string line;
        if (!std::getline(in, line)) throw ValidationError("parse: missing header");
        std::istringstream hs(line);
        std::string kw;
        hs >> kw;
        if (kw != keyword) throw ValidationError("parse: expected header '" + keyword + "', got '" + kw + "'");
        std::vector<std::string> out;
        std::string tok;
        while (hs >> tok) out.push_back(tok);
        if (out.size() != params)
            throw ValidationError("parse: header '" + keyword + "' needs " + std::to_string(params) + " parameters");
        return out;
    }

    // Reads exactly `count` row lines; empty lines denote empty rows.
    std::vector<std::vector<int>> rows(size_t count) {
        std::vector<std::vector<int>> out;
        std::string line;
        while (out.size() < count) {
            if (!std::getline(in, line)) throw ValidationError("parse: expected " + std::to_string(count) + " rows");
            std::istringstream ls(line);
            std::vector<int> row;
            int v;
            while (ls >> v) row.push_back(v);
            if (!ls.eof() && ls.fail()) throw ValidationError("parse: bad integer in row " + std::to_string(out.size() + 1));
            out.push_back(std::move(row));
        }
        std::string rest;
        while (std::getline(in, rest))
            if (!rest.empty() && rest.find_first_not_of(" \t\r") != std::string::npos)
                throw ValidationError("parse: trailing content after rows");
        return out;
    }
};

int to_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ValidationError("parse: bad integer '" + s + "'");
    return v;
}

}  // namespace

std::string to_text(const AstTriangle& t) {
    std::ostringstream os;
    os << "AST " << t.order() << "\n";
    emit_rows_any(os, t.rows());
    return os.str();
}

std::string to_text(const MagogPentagon& p) {
    std::ostringstream os;
    const MagogShape& s = p.shape();
    os << "MAGOG " << s.m << " " << s.n << " " << s.k << " " << s.lambda << "\n";
    emit_rows(os, p.rows());
    return os.str();
}

std::string to_text(const GogPentagon& g) {
    std::ostringstream os;
    const GogShape& s = g.shape();
    os << "GOG " << s.m << " " << s.n << " " << s.k << " " << s.l << "\n";
    emit_rows(os, g.rows());
    return os.str();
}

std::string to_text(const GtPattern& g) {
    std::ostringstream os;
    os << "GT " << g.order() << "\n";
    emit_rows(os, g.rows());
    return os.str();
}

std::string to_text(const Asm& a) {
    std::ostringstream os;
    os << "ASM " << a.order() << "\n";
    emit_rows_any(os, a.rows());
    return os.str();
}

AstTriangle parse_ast(const std::string& text) {
    TextReader r(text);
    auto h = r.header("AST", 1);
    int n = to_int(h[0]);
    if (n < 1) throw ValidationError("parse: AST order must be positive");
    return AstTriangle::from_rows(r.rows(static_cast<size_t>(n)));
}

MagogPentagon parse_magog(const std::string& text) {
    TextReader r(text);
    auto h = r.header("MAGOG", 4);
    MagogShape s{to_int(h[0]), to_int(h[1]), to_int(h[2]), to_int(h[3])};
    if (s.k < 1) throw ValidationError("parse: MAGOG k must be positive");
    return MagogPentagon::from_rows(s, r.rows(static_cast<size_t>(s.k)));
}

GogPentagon parse_gog(const std::string& text) {
    TextReader r(text);
    auto h = r.header("GOG", 4);
    GogShape s{to_int(h[0]), to_int(h[1]), to_int(h[2]), to_int(h[3])};
    if (s.n < 1) throw ValidationError("parse: GOG n must be positive");
    return GogPentagon::from_rows(s, r.rows(static_cast<size_t>(s.n)));
}

GtPattern parse_gt(const std::string& text) {
    TextReader r(text);
    auto h = r.header("GT", 1);
    int n = to_int(h[0]);
    if (n < 1) throw ValidationError("parse: GT order must be positive");
    return GtPattern::from_rows(r.rows(static_cast<size_t>(n)));
}

Asm parse_asm(const std::string& text) {
    TextReader r(text);
    auto h = r.header("ASM", 1);
    int n = to_int(h[0]);
    if (n < 1) throw ValidationError("parse: ASM order must be positive");
    return Asm::from_rows(r.rows(static_cast<size_t>(n)));
}

}  // namespace aspen
