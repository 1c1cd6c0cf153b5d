// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_IO_HPP
#define CEIG_IO_HPP

#include <filesystem>
#include <string>

#include "ceig/eigensolution.hpp"
#include "ceig/filters.hpp"
#include "ceig/loewner_single.hpp"
#include "ceig/modal.hpp"
#include "ceig/quadrature_data.hpp"

namespace ceig::io
{

// Binary container for quadrature tensors. Header: magic "CEQD", u32
// version, u64 n/ℓ/r/N, contour descriptor; payload: ql then qr slabs as
// row-major (re, im) doubles, little-endian.
void save_quadrature_data(const QuadratureData &data, const std::filesystem::path &path);
QuadratureData load_quadrature_data(const std::filesystem::path &path);

/// JSON variant for small cases (complex entries as [re, im] pairs).
void save_quadrature_data_json(const QuadratureData &data,
                               const std::filesystem::path &path);
QuadratureData load_quadrature_data_json(const std::filesystem::path &path);

/// Deterministic float formatting shared by every CSV writer ("%.17g").
std::string format_double(double x);

/// Columns: index, re(lambda), im(lambda), residual (blank when absent).
void write_eigenvalues_csv(const EigenSolution &solution, const std::filesystem::path &path);

/// Columns: index, residual, relative_residual (blank when absent).
void write_residuals_csv(const EigenSolution &solution, const std::filesystem::path &path);

/// Columns: index, sigma, gap_ratio.
void write_singular_values_csv(const SingularValueReport &report,
                               const std::filesystem::path &path);

/// Columns: re(z), im(z), re(b), im(b), abs(b).
void write_filter_profile_csv(const FilterProfile &profile,
                              const std::filesystem::path &path);

/// Pole-residue records {poles, c_factors, b_factors} as [re, im] pairs.
void save_modal_rom(const ModalRom &rom, const std::filesystem::path &path);
ModalRom load_modal_rom(const std::filesystem::path &path);

/// Debug dump of a single-point pencil (complex entries as [re, im]).
void save_pencil_json(const SinglePointPencil &pencil, const std::filesystem::path &path);

}  // namespace ceig::io

#endif  // CEIG_IO_HPP
