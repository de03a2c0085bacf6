#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rado/matrix.hpp"
#include "rado/search.hpp"

namespace rado {

/// Matrix text format: first line "n m field" with field "Q" or "F<p>",
/// then n*m whitespace-separated integers; '#' starts a comment.
struct MatrixFile {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Field field = Field::rationals();
    std::vector<std::int64_t> entries; // row-major integers as written
};

MatrixFile parse_matrix_text(std::istream& in);
MatrixFile read_matrix_file(const std::string& path);
std::string format_matrix_text(std::size_t rows, std::size_t cols, const Field& f,
                               const std::vector<std::int64_t>& entries);

/// Entries embedded into the file's field, or into `override_field` when
/// given (integers are reinterpreted, e.g. reduced mod p).
Matrix to_matrix(const MatrixFile& mf, const std::optional<Field>& override_field = std::nullopt);

/// Integer rows for the search module.
std::vector<std::vector<std::int64_t>> to_int_rows(const MatrixFile& mf);

/// Colouring file: a mandatory header line
///   ground=interval:N | ground=modstar:M | ground=zmod:N
/// then one line of comma-separated colour indices ('#' comments allowed).
/// interval:N and modstar:M colour the elements 1..N (resp. 1..M-1);
/// zmod:N colours the residues 0..N-1.
struct ColouringFile {
    enum class Ground { Interval, ModularStar, ZMod };
    Ground ground = Ground::Interval;
    std::int64_t bound = 1;
    std::vector<int> colours;

    /// Number of elements the payload must cover.
    std::size_t expected_size() const;
};

ColouringFile parse_colouring_text(std::istream& in);
ColouringFile read_colouring_file(const std::string& path);
std::string format_colouring_text(const ColouringFile& cf);

/// Ground-set colouring (interval / modstar) as a search-module Colouring.
Colouring to_ground_colouring(const ColouringFile& cf, int num_colours);

/// Plain comma-separated list of colour indices, no header; used for the
/// Hales-Jewett word colourings.
std::vector<int> read_colour_list_file(const std::string& path);

} // namespace rado
