#include "qlat/cli/input.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qlat::cli {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineReader {
public:
    LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const { throw InputError(what, line_, pos + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    void expect_end() {
        if (!at_end())
            fail("unexpected text after declaration");
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string identifier() {
        skip_space();
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
            fail("expected identifier");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t count() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a positive integer");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6)
            fail_at("dimension too large", start);
        return std::stoul(digits);
    }

    GaussianRational scalar() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        try {
            return parse_scalar(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            fail_at(std::string("bad scalar: ") + e.what(), start + e.position());
        }
    }

    std::vector<GaussianRational> vector() {
        expect('[');
        std::vector<GaussianRational> out;
        do
            out.push_back(scalar());
        while (accept(','));
        expect(']');
        return out;
    }

    /// Offset of the next token.
    std::size_t token_pos() {
        skip_space();
        return pos_;
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

InputError::InputError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(const std::string& declaration, const std::string& law)
    : std::runtime_error("invalid declaration '" + declaration + "': " + law), declaration_(declaration) {}

const NamedRay* InputDocument::find_ray(std::string_view name) const {
    for (const auto& r : rays)
        if (r.name == name)
            return &r;
    return nullptr;
}

const NamedProjector* InputDocument::find_projector(std::string_view name) const {
    for (const auto& p : projectors)
        if (p.name == name)
            return &p;
    return nullptr;
}

const NamedContext* InputDocument::find_context(std::string_view name) const {
    for (const auto& c : contexts)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::vector<Subspace> InputDocument::seeds() const {
    std::vector<Subspace> out;
    for (const auto& r : rays)
        out.push_back(image(r.vector));
    for (const auto& p : projectors) {
        out.push_back(image(p.matrix));
        out.push_back(image(ExactMatrix::identity(ambient_dim) - p.matrix));
    }
    return out;
}

InputDocument parse_input(std::string_view text) {
    InputDocument doc;
    std::set<std::string> names;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        LineReader in(line, line_no);
        if (in.at_end())
            continue;

        const std::size_t keyword_pos = in.token_pos();
        const std::string keyword = in.identifier();
        if (keyword == "dim") {
            if (doc.ambient_dim != 0)
                in.fail_at("duplicate 'dim' declaration", keyword_pos);
            const std::size_t n = in.count();
            if (n == 0)
                in.fail("dimension must be positive");
            in.expect_end();
            doc.ambient_dim = n;
            continue;
        }
        if (keyword != "ray" && keyword != "proj" && keyword != "context")
            in.fail_at("unknown declaration '" + keyword + "'", keyword_pos);
        if (doc.ambient_dim == 0)
            in.fail_at("'dim' must come before '" + keyword + "'", keyword_pos);

        const std::size_t name_pos = in.token_pos();
        const std::string name = in.identifier();
        if (!names.insert(name).second)
            in.fail_at("duplicate name '" + name + "'", name_pos);
        in.expect('=');

        if (keyword == "ray") {
            std::vector<GaussianRational> v = in.vector();
            in.expect_end();
            if (v.size() != doc.ambient_dim)
                throw ValidationError(name, "ray has " + std::to_string(v.size()) + " components, expected " +
                                                std::to_string(doc.ambient_dim));
            ExactMatrix column = ExactMatrix::column(v);
            if (column.is_zero())
                throw ValidationError(name, "ray is the zero vector");
            doc.rays.push_back({name, std::move(column)});
        } else if (keyword == "proj") {
            std::vector<GaussianRational> entries;
            std::size_t rows = 0;
            in.expect('[');
            do {
                std::vector<GaussianRational> row = in.vector();
                if (row.size() != doc.ambient_dim)
                    throw ValidationError(name, "row " + std::to_string(rows + 1) + " has " +
                                                    std::to_string(row.size()) + " entries, expected " +
                                                    std::to_string(doc.ambient_dim));
                entries.insert(entries.end(), row.begin(), row.end());
                ++rows;
            } while (in.accept(','));
            in.expect(']');
            in.expect_end();
            if (rows != doc.ambient_dim)
                throw ValidationError(name, "matrix has " + std::to_string(rows) + " rows, expected " +
                                                std::to_string(doc.ambient_dim));
            ExactMatrix m(rows, doc.ambient_dim, std::move(entries));
            if (!is_hermitian(m))
                throw ValidationError(name, "not Hermitian (P* != P)");
            if (!is_idempotent(m))
                throw ValidationError(name, "not idempotent (P^2 != P)");
            doc.projectors.push_back({name, std::move(m)});
        } else {
            NamedContext ctx{name, {}};
            do {
                const std::size_t member_pos = in.token_pos();
                std::string member = in.identifier();
                if (!doc.find_projector(member))
                    in.fail_at("unknown projector '" + member + "'", member_pos);
                ctx.members.push_back(std::move(member));
            } while (in.accept(','));
            in.expect_end();
            doc.contexts.push_back(std::move(ctx));
        }
    }
    if (doc.ambient_dim == 0)
        throw InputError("missing 'dim' declaration", line_no, 1);
    return doc;
}

InputDocument read_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input(buffer.str());
}

}  // namespace qlat::cli
