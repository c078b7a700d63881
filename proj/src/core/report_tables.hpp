#pragma once
// Builders turning curve samples, validation reports, volume samples and
// anchor sweeps into CSV-ready tables.

#include <span>

#include "core/curve.hpp"
#include "core/projection.hpp"
#include "core/table.hpp"
#include "core/validator.hpp"

namespace isogeo4 {

// One row per sample: s, frame vectors, curvatures, degeneracy flags.
// Degenerate rows carry NaN in the frame/curvature columns and a 1 in the
// 'degenerate' column; the count of such rows is reported through the out
// parameter.
Table frenet_table(const Curve4& curve, std::span<const double> s_values,
                   int* degenerate_rows = nullptr);

// One row per sample plus a trailing summary row (index -1) holding the
// extrema the verdict was computed from.
Table validation_table(const ValidationReport& report);

Table volume_table(std::span<const VolumeRow> rows);

Table sweep_table(std::span<const SweepRow> rows);

}  // namespace isogeo4
