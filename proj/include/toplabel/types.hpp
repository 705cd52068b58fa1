#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toplabel {

// Tolerance on the unit-sum invariant of a normalized score vector.
inline constexpr double kScoreSumTolerance = 1e-9;

// Probability vector over K categories: the raw classifier output for one
// sample. Entries are nonnegative and sum to one within kScoreSumTolerance.
class ScoreVector {
public:
    ScoreVector() = default;
    explicit ScoreVector(std::vector<double> entries);

    // Rescales nonnegative entries to unit sum. This is the ingestion path:
    // inputs on other scales are divided down before construction.
    static ScoreVector normalized(std::vector<double> entries);

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    bool operator==(const ScoreVector&) const = default;

private:
    std::vector<double> entries_;
};

struct Sample {
    std::string id;
    int true_label = 0;
    ScoreVector scores;
};

struct LabeledDataset {
    std::vector<std::string> category_names;
    std::vector<Sample> samples;

    int num_categories() const { return static_cast<int>(category_names.size()); }
};

// Throws std::invalid_argument on any violated invariant (K mismatch,
// duplicate names, out-of-range label).
void validate(const LabeledDataset& data);

// The per-category binarization: scalar top scores of the samples predicted
// as `category`, split into true and false positives.
struct TopLabelView {
    int category = 0;
    std::vector<double> tp_scores; // ascending
    std::vector<double> fp_scores; // ascending
    // Admissible score scale (internally always [0, 1]).
    std::pair<double, double> score_range{0.0, 1.0};

    std::size_t positives() const { return tp_scores.size() + fp_scores.size(); }
    bool empty() const { return positives() == 0; }
    // |TP| / (|TP| + |FP|); requires a nonempty view.
    double precision() const;
    // Smallest/largest observed positive score; requires a nonempty view.
    std::pair<double, double> observed_range() const;
};

struct ConfusionTables {
    // joint[i][j] = count of samples with true category i predicted as j.
    std::vector<std::vector<long long>> joint;
    std::vector<std::vector<double>> row_normalized;
    std::vector<std::vector<double>> col_normalized;
    // A row/column with zero mass has no defined conditional distribution;
    // the corresponding normalized entries must not be read.
    std::vector<bool> row_defined;
    std::vector<bool> col_defined;
    long long total = 0;
};

// Argmax index; ties break to the lowest index.
int predicted_category(const ScoreVector& scores);

TopLabelView top_label_view(const LabeledDataset& data, int category);

// Errors on an empty dataset.
ConfusionTables confusion_tables(const LabeledDataset& data);

// Diagonal of the column-normalized table: P(true = k | predicted = k).
// Absent where no sample predicts k.
std::vector<std::optional<double>> conf1(const LabeledDataset& data);

// One calibrated sample: predicted confidence plus the 0/1 correctness
// outcome. The unit every loss and metric consumes.
struct BinaryOutcome {
    double confidence = 0.0;
    bool is_tp = false;
};

} // namespace toplabel
