#include "rado/io.hpp"

#include <fstream>
#include <sstream>

namespace rado {

namespace {

/// Strips '#' comments and returns the concatenated token stream.
std::string strip_comments(std::istream& in) {
    std::string out, line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        out += line;
        out += '\n';
    }
    return out;
}

std::vector<int> parse_comma_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::istringstream ts(token);
        int v;
        if (!(ts >> v)) throw InputError("bad colour index: '" + token + "'");
        std::string rest;
        if (ts >> rest) throw InputError("trailing junk in colour list: '" + rest + "'");
        out.push_back(v);
    }
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return in;
}

} // namespace

MatrixFile parse_matrix_text(std::istream& in) {
    std::istringstream ss(strip_comments(in));
    MatrixFile mf;
    std::string field_spec;
    if (!(ss >> mf.rows >> mf.cols >> field_spec))
        throw InputError("matrix header must be 'n m field'");
    if (mf.rows == 0 || mf.cols == 0) throw InputError("matrix dimensions must be positive");
    mf.field = Field::parse(field_spec);
    mf.entries.reserve(mf.rows * mf.cols);
    for (std::size_t i = 0; i < mf.rows * mf.cols; ++i) {
        std::int64_t v;
        if (!(ss >> v)) throw InputError("matrix file ends before all entries are read");
        mf.entries.push_back(v);
    }
    std::string rest;
    if (ss >> rest) throw InputError("trailing junk in matrix file: '" + rest + "'");
    return mf;
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_matrix_text(in);
}

std::string format_matrix_text(std::size_t rows, std::size_t cols, const Field& f,
                               const std::vector<std::int64_t>& entries) {
    if (entries.size() != rows * cols) throw DimensionMismatch("entry count != rows*cols");
    std::ostringstream os;
    os << rows << ' ' << cols << ' ' << f.to_string() << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c) os << ' ';
            os << entries[r * cols + c];
        }
        os << '\n';
    }
    return os.str();
}

Matrix to_matrix(const MatrixFile& mf, const std::optional<Field>& override_field) {
    return Matrix::from_ints(mf.rows, mf.cols, mf.entries,
                             override_field ? *override_field : mf.field);
}

std::vector<std::vector<std::int64_t>> to_int_rows(const MatrixFile& mf) {
    std::vector<std::vector<std::int64_t>> rows(mf.rows);
    for (std::size_t r = 0; r < mf.rows; ++r)
        rows[r].assign(mf.entries.begin() + static_cast<std::ptrdiff_t>(r * mf.cols),
                       mf.entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * mf.cols));
    return rows;
}

std::size_t ColouringFile::expected_size() const {
    switch (ground) {
        case Ground::Interval: return static_cast<std::size_t>(bound);
        case Ground::ModularStar: return static_cast<std::size_t>(bound - 1);
        case Ground::ZMod: return static_cast<std::size_t>(bound);
    }
    throw Error("unreachable");
}

ColouringFile parse_colouring_text(std::istream& in) {
    std::istringstream ss(strip_comments(in));
    std::string header;
    while (std::getline(ss, header)) {
        // skip blank lines left by comment stripping
        if (header.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    const std::string prefix = "ground=";
    std::size_t start = header.find_first_not_of(" \t");
    if (start == std::string::npos || header.compare(start, prefix.size(), prefix) != 0)
        throw InputError("colouring file must start with a 'ground=...' header");
    std::string spec = header.substr(start + prefix.size());
    while (!spec.empty() && (spec.back() == '\r' || spec.back() == ' ')) spec.pop_back();

    ColouringFile cf;
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("ground spec needs 'kind:bound'");
    std::string kind = spec.substr(0, colon);
    cf.bound = std::stoll(spec.substr(colon + 1));
    if (kind == "interval") {
        cf.ground = ColouringFile::Ground::Interval;
        if (cf.bound < 1) throw InputError("interval bound must be >= 1");
    } else if (kind == "modstar") {
        cf.ground = ColouringFile::Ground::ModularStar;
        if (cf.bound < 2) throw InputError("modstar modulus must be >= 2");
    } else if (kind == "zmod") {
        cf.ground = ColouringFile::Ground::ZMod;
        if (cf.bound < 1) throw InputError("zmod modulus must be >= 1");
    } else {
        throw InputError("unknown ground kind: " + kind);
    }

    std::string payload, line;
    while (std::getline(ss, line)) payload += line;
    cf.colours = parse_comma_list(payload);
    if (cf.colours.size() != cf.expected_size())
        throw InputError("colouring has " + std::to_string(cf.colours.size()) +
                         " entries, ground needs " + std::to_string(cf.expected_size()));
    for (int c : cf.colours)
        if (c < 0) throw InputError("negative colour index");
    return cf;
}

ColouringFile read_colouring_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_colouring_text(in);
}

std::string format_colouring_text(const ColouringFile& cf) {
    std::ostringstream os;
    os << "ground=";
    switch (cf.ground) {
        case ColouringFile::Ground::Interval: os << "interval:"; break;
        case ColouringFile::Ground::ModularStar: os << "modstar:"; break;
        case ColouringFile::Ground::ZMod: os << "zmod:"; break;
    }
    os << cf.bound << '\n';
    for (std::size_t i = 0; i < cf.colours.size(); ++i) {
        if (i) os << ',';
        os << cf.colours[i];
    }
    os << '\n';
    return os.str();
}

Colouring to_ground_colouring(const ColouringFile& cf, int num_colours) {
    Domain dom = cf.ground == ColouringFile::Ground::Interval ? Domain::interval(cf.bound)
                 : cf.ground == ColouringFile::Ground::ModularStar
                     ? Domain::modular_star(cf.bound)
                     : throw InputError("zmod colourings do not describe a ground set");
    int max_colour = 0;
    for (int c : cf.colours) max_colour = std::max(max_colour, c);
    if (num_colours <= max_colour)
        throw InputError("colour index " + std::to_string(max_colour) + " exceeds r-1");
    return Colouring{dom, num_colours, cf.colours};
}

std::vector<int> read_colour_list_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string text = strip_comments(in);
    std::string flattened;
    for (char ch : text)
        if (ch != '\n' && ch != '\r' && ch != ' ' && ch != '\t') flattened += ch;
    return parse_comma_list(flattened);
}

} // namespace rado
