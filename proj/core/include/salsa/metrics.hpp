#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "salsa/trajectory.hpp"

namespace salsa {

enum class OutputKind { pointer, mask, scalar };

OutputKind output_kind(Algorithm algorithm);
// Name of the algorithm's single output feature: pi, in_mis or ecc.
std::string_view output_name(Algorithm algorithm);

// One graph's output: n pointers, n mask bits, or a single scalar.
using OutputVector = std::vector<double>;

// Rounds halves away from zero (2.5 -> 3, -2.5 -> -3).
std::int64_t round_half_away(double x);

// All metrics score graph i of predictions against graph i of truth and throw
// std::invalid_argument on length or shape mismatches, on empty input, and
// when applied to an output kind they do not support. Percentages are in
// [0, 100]. Node-level metrics are macro averages: per graph, then the
// unweighted mean over graphs.

// Pointer and mask outputs. Mask predictions count as 1 when >= 0.5.
double node_accuracy(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind);

// Fraction of graphs predicted entirely correctly. Scalar predictions are
// rounded half away from zero before comparison.
double graph_accuracy(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind);

// Binary F1 on the positive class, mask outputs only. A graph with neither
// true nor predicted positives scores 1.
double node_f1(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind);

// Mean squared error of unrounded scalar predictions over graphs.
double graph_mse(std::span<const OutputVector> predictions, std::span<const OutputVector> truth, OutputKind kind);

// Metric names reported for an algorithm, in report order.
std::vector<std::string_view> applicable_metrics(Algorithm algorithm);

}  // namespace salsa
