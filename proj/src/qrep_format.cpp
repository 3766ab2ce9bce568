#include "qmob/qrep_format.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace qmob {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

// Strip the comment, then split on blanks remembering start columns.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t end = line.find('#');
    if (end == std::string::npos)
        end = line.size();
    std::size_t i = 0;
    while (i < end) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < end && line[j] != ' ' && line[j] != '\t') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int parse_int(const std::string& s, int line, int col, const char* what) {
    if (s.empty() || (!std::isdigit(static_cast<unsigned char>(s[0])) && s[0] != '-'))
        throw SyntaxError(line, col, std::string(what) + " must be an integer, got '" + s + "'");
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size())
            throw SyntaxError(line, col,
                              std::string(what) + " must be an integer, got '" + s + "'");
        if (v > 1000000 || v < -1000000)
            throw SyntaxError(line, col, std::string(what) + " out of range: " + s);
        return static_cast<int>(v);
    } catch (const SyntaxError&) {
        throw;
    } catch (const std::exception&) {
        throw SyntaxError(line, col, std::string(what) + " must be an integer, got '" + s + "'");
    }
}

// Integer or fraction n/d in decimal; exact.
Rat parse_rat(const std::string& s, int line, int col) {
    std::size_t slash = s.find('/');
    std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    std::string ds = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    auto ok = [](const std::string& t, bool sign) {
        if (t.empty())
            return false;
        std::size_t k = sign && t[0] == '-' ? 1 : 0;
        if (k == t.size())
            return false;
        for (; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k])))
                return false;
        return true;
    };
    if (!ok(ns, true) || !ok(ds, false))
        throw SyntaxError(line, col, "expected a number like 2, -1 or 3/4, got '" + s + "'");
    Int num(ns), den(ds);
    if (den == 0)
        throw SyntaxError(line, col, "zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Path parse_path(const std::string& s, int line, int col, const Quiver& q) {
    Path p;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find('.', i);
        if (j == std::string::npos)
            j = s.size();
        std::string seg = s.substr(i, j - i);
        if (seg.empty())
            throw SyntaxError(line, col, "empty arrow name in path '" + s + "'");
        try {
            q.arrow_index(seg);
        } catch (const DomainError&) {
            throw SyntaxError(line, col, "unknown arrow '" + seg + "' in path '" + s + "'");
        }
        p.arrows.push_back(seg);
        i = j + 1;
        if (j == s.size())
            break;
    }
    return p;
}

// "[[1,0],[0,1]]" with whitespace already squeezed out by tokenization.
std::vector<std::vector<Rat>> parse_matrix(const std::string& s, int line, int col) {
    std::vector<std::vector<Rat>> rows;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> SyntaxError {
        return SyntaxError(line, col, msg + " in matrix '" + s + "'");
    };
    auto expect = [&](char c) {
        if (i >= s.size() || s[i] != c)
            throw fail(std::string("expected '") + c + "'");
        ++i;
    };
    expect('[');
    if (i < s.size() && s[i] == ']') {
        ++i;
    } else {
        for (;;) {
            expect('[');
            std::vector<Rat> row;
            if (i < s.size() && s[i] == ']') {
                ++i;
            } else {
                for (;;) {
                    std::size_t j = i;
                    while (j < s.size() && s[j] != ',' && s[j] != ']') ++j;
                    row.push_back(parse_rat(s.substr(i, j - i), line, col));
                    i = j;
                    if (i < s.size() && s[i] == ',') {
                        ++i;
                        continue;
                    }
                    expect(']');
                    break;
                }
            }
            rows.push_back(std::move(row));
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            expect(']');
            break;
        }
    }
    if (i != s.size())
        throw fail("trailing characters");
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw fail("rows of unequal length");
    return rows;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace

Representation parse_qrep(const std::string& text) {
    enum class Mode { Top, InQuiver, InRelations, InRep };
    Mode mode = Mode::Top;

    bool have_name = false, have_field = false, have_vertices = false;
    bool quiver_done = false;
    std::string name;
    FieldSpec field = FieldSpec::rationals();
    int n_vertices = 0;
    std::vector<Arrow> arrows;
    Quiver quiver(1, {});
    std::vector<Relation> relations;
    std::map<int, int> dims_given;                             // vertex -> dim
    std::vector<std::pair<int, std::vector<std::vector<Rat>>>> maps_given;  // arrow idx

    // Build the quiver once its section ends so later sections can range-check.
    auto finish_quiver = [&](int line) {
        if (quiver_done)
            return;
        if (mode != Mode::InQuiver)
            throw SyntaxError(line, 1, "expected a `quiver` section first");
        if (!have_vertices)
            throw SyntaxError(line, 1, "quiver section has no `vertices` line");
        try {
            quiver = Quiver(n_vertices, arrows);
        } catch (const DomainError& e) {
            throw ValidationError({e.what()});
        }
        quiver_done = true;
    };

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::vector<Token> t = tokenize(raw);
        if (t.empty())
            continue;
        const std::string& kw = t[0].text;
        auto need = [&](std::size_t count) {
            if (t.size() != count + 1)
                throw SyntaxError(lineno, t[0].col,
                                  "`" + kw + "` takes " + std::to_string(count) +
                                      " argument(s), got " + std::to_string(t.size() - 1));
        };

        if (kw == "name") {
            if (have_name)
                throw SyntaxError(lineno, t[0].col, "duplicate `name`");
            if (t.size() < 2)
                throw SyntaxError(lineno, t[0].col, "`name` needs a value");
            std::string v;
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (i > 1)
                    v += ' ';
                v += t[i].text;
            }
            name = v;
            have_name = true;
        } else if (kw == "field") {
            if (have_field)
                throw SyntaxError(lineno, t[0].col, "duplicate `field`");
            need(1);
            if (t[1].text == "infinite") {
                field = FieldSpec::rationals();
            } else {
                const std::string& ps = t[1].text;
                bool digits = !ps.empty();
                for (char ch : ps) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
                if (!digits)
                    throw SyntaxError(lineno, t[1].col,
                                      "field must be `infinite` or a prime, got '" + ps + "'");
                try {
                    field = FieldSpec::prime(Int(ps));
                } catch (const DomainError& e) {
                    throw SyntaxError(lineno, t[1].col, e.what());
                }
            }
            have_field = true;
        } else if (kw == "quiver") {
            need(0);
            if (quiver_done || mode == Mode::InQuiver)
                throw SyntaxError(lineno, t[0].col, "duplicate `quiver` section");
            mode = Mode::InQuiver;
        } else if (kw == "vertices") {
            if (mode != Mode::InQuiver)
                throw SyntaxError(lineno, t[0].col, "`vertices` belongs in the quiver section");
            if (have_vertices)
                throw SyntaxError(lineno, t[0].col, "duplicate `vertices`");
            need(1);
            n_vertices = parse_int(t[1].text, lineno, t[1].col, "vertex count");
            have_vertices = true;
        } else if (kw == "arrow") {
            if (mode != Mode::InQuiver)
                throw SyntaxError(lineno, t[0].col, "`arrow` belongs in the quiver section");
            need(3);
            Arrow a;
            a.name = t[1].text;
            a.source = parse_int(t[2].text, lineno, t[2].col, "arrow source");
            a.target = parse_int(t[3].text, lineno, t[3].col, "arrow target");
            arrows.push_back(std::move(a));
        } else if (kw == "relations") {
            need(0);
            finish_quiver(lineno);
            mode = Mode::InRelations;
        } else if (kw == "rel") {
            if (mode != Mode::InRelations)
                throw SyntaxError(lineno, t[0].col, "`rel` belongs in the relations section");
            Relation r;
            std::size_t i = 1;
            int sign = 1;
            if (i < t.size() && (t[i].text == "+" || t[i].text == "-")) {
                sign = t[i].text == "-" ? -1 : 1;
                ++i;
            }
            while (true) {
                if (i >= t.size())
                    throw SyntaxError(lineno, t[0].col, "`rel` needs coefficient/path pairs");
                if (i + 1 >= t.size())
                    throw SyntaxError(lineno, t[i].col,
                                      "coefficient '" + t[i].text + "' without a path");
                Rat c = parse_rat(t[i].text, lineno, t[i].col);
                Path p = parse_path(t[i + 1].text, lineno, t[i + 1].col, quiver);
                r.terms.push_back({Rat(sign * c), std::move(p)});
                i += 2;
                if (i == t.size())
                    break;
                if (t[i].text == "+")
                    sign = 1;
                else if (t[i].text == "-")
                    sign = -1;
                else
                    throw SyntaxError(lineno, t[i].col,
                                      "expected '+' or '-' between relation terms, got '" +
                                          t[i].text + "'");
                ++i;
            }
            relations.push_back(std::move(r));
        } else if (kw == "representation") {
            need(0);
            if (mode == Mode::InRep)
                throw SyntaxError(lineno, t[0].col, "duplicate `representation` section");
            finish_quiver(lineno);
            mode = Mode::InRep;
        } else if (kw == "dim") {
            if (mode != Mode::InRep)
                throw SyntaxError(lineno, t[0].col, "`dim` belongs in the representation section");
            need(2);
            int v = parse_int(t[1].text, lineno, t[1].col, "vertex");
            if (v < 1 || v > n_vertices)
                throw SyntaxError(lineno, t[1].col,
                                  "vertex " + std::to_string(v) + " out of range 1.." +
                                      std::to_string(n_vertices));
            if (dims_given.count(v))
                throw SyntaxError(lineno, t[1].col,
                                  "duplicate `dim` for vertex " + std::to_string(v));
            dims_given[v] = parse_int(t[2].text, lineno, t[2].col, "dimension");
        } else if (kw == "map") {
            if (mode != Mode::InRep)
                throw SyntaxError(lineno, t[0].col, "`map` belongs in the representation section");
            if (t.size() < 3)
                throw SyntaxError(lineno, t[0].col, "`map` needs an arrow name and a matrix");
            int ai;
            try {
                ai = quiver.arrow_index(t[1].text);
            } catch (const DomainError&) {
                throw SyntaxError(lineno, t[1].col, "unknown arrow '" + t[1].text + "'");
            }
            for (const auto& mg : maps_given)
                if (mg.first == ai)
                    throw SyntaxError(lineno, t[1].col,
                                      "duplicate `map` for arrow '" + t[1].text + "'");
            std::string lit;
            for (std::size_t i = 2; i < t.size(); ++i) lit += t[i].text;
            maps_given.emplace_back(ai, parse_matrix(lit, lineno, t[2].col));
        } else {
            throw SyntaxError(lineno, t[0].col, "unknown keyword '" + kw + "'");
        }
    }

    std::vector<std::string> missing;
    if (!have_field)
        missing.push_back("missing `field` line");
    if (!quiver_done) {
        if (mode == Mode::InQuiver)
            finish_quiver(lineno + 1);
        else
            missing.push_back("missing `quiver` section");
    }
    if (mode != Mode::InRep)
        missing.push_back("missing `representation` section");
    if (!missing.empty())
        throw ValidationError(missing);

    Representation m;
    m.field = field;
    m.quiver = quiver;
    m.name = name;
    m.relations = relations;
    m.dims.assign(static_cast<std::size_t>(n_vertices), 0);
    for (const auto& [v, d] : dims_given) m.dims[static_cast<std::size_t>(v - 1)] = d;
    m.maps.reserve(quiver.arrows().size());
    for (std::size_t i = 0; i < quiver.arrows().size(); ++i) {
        const Arrow& a = quiver.arrows()[i];
        const std::vector<std::vector<Rat>>* lit = nullptr;
        for (const auto& mg : maps_given)
            if (mg.first == static_cast<int>(i))
                lit = &mg.second;
        if (lit == nullptr) {
            m.maps.push_back(Mat(field, m.dims[static_cast<std::size_t>(a.target - 1)],
                                 m.dims[static_cast<std::size_t>(a.source - 1)]));
        } else {
            int rows = static_cast<int>(lit->size());
            int cols = rows == 0 ? 0 : static_cast<int>(lit->front().size());
            Mat mat(field, rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c)
                    mat.set(r, c, (*lit)[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            m.maps.push_back(std::move(mat));
        }
    }

    std::vector<std::string> errs = validate(m);
    if (!errs.empty())
        throw ValidationError(errs);
    return m;
}

Representation parse_qrep_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_qrep(buf.str());
}

std::string print_qrep(const Representation& m) {
    std::ostringstream out;
    if (!m.name.empty())
        out << "name " << m.name << "\n";
    out << "field " << (m.field.is_prime() ? m.field.p().get_str() : std::string("infinite"))
        << "\n";
    out << "quiver\n  vertices " << m.quiver.n_vertices() << "\n";
    for (const Arrow& a : m.quiver.arrows())
        out << "  arrow " << a.name << " " << a.source << " " << a.target << "\n";
    if (!m.relations.empty()) {
        out << "relations\n";
        for (const Relation& r : m.relations) {
            out << "  rel";
            for (std::size_t i = 0; i < r.terms.size(); ++i) {
                const RelationTerm& term = r.terms[i];
                Rat c = term.coeff;
                if (i == 0) {
                    out << " " << rat_str(c);
                } else {
                    out << (c < 0 ? " - " : " + ") << rat_str(Rat(abs(c)));
                }
                out << " ";
                for (std::size_t j = 0; j < term.path.arrows.size(); ++j)
                    out << (j ? "." : "") << term.path.arrows[j];
            }
            out << "\n";
        }
    }
    out << "representation\n";
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (m.dims[v] != 0)
            out << "  dim " << v + 1 << " " << m.dims[v] << "\n";
    for (std::size_t i = 0; i < m.maps.size(); ++i) {
        const Mat& mat = m.maps[i];
        if (mat.is_zero())
            continue;
        out << "  map " << m.quiver.arrows()[i].name << " [";
        for (int r = 0; r < mat.rows(); ++r) {
            out << (r ? ",[" : "[");
            for (int c = 0; c < mat.cols(); ++c) out << (c ? "," : "") << rat_str(mat.at(r, c));
            out << "]";
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace qmob
