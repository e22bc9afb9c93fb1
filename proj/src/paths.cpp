#include "wellpath/paths.hpp"

#include <algorithm>

namespace wellpath {

namespace {

bool is_permutation_of_1_to_n(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : labels) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

}  // namespace

WellLabelledPath validate_path(std::vector<Step> steps, std::vector<int> labels) {
    if (labels.size() != steps.size() + 1)
        throw PathError(PathError::Code::LengthMismatch,
                        "label sequence must be one longer than step word");
    if (!is_permutation_of_1_to_n(labels))
        throw PathError(PathError::Code::NotAPermutation,
                        "labels are not a permutation of {1..n}");
    for (size_t i = 0; i < steps.size(); ++i) {
        const Step s = steps[i];
        if (s != -1 && s != 0 && s != 1)
            throw PathError(PathError::Code::StepLabelConflict,
                            "step value outside {-1,0,+1}", static_cast<int>(i) + 1);
        if ((s == -1 && !(labels[i] < labels[i + 1])) ||
            (s == +1 && !(labels[i] > labels[i + 1])))
            throw PathError(PathError::Code::StepLabelConflict,
                            "step " + std::to_string(i + 1) +
                                " contradicts the label comparison",
                            static_cast<int>(i) + 1);
    }
    return WellLabelledPath{std::move(steps), std::move(labels)};
}

PathClass classify(const WellLabelledPath& path) {
    const int m = static_cast<int>(path.steps.size());  // n-1
    int sum = 0;
    bool inner_nonneg = true;  // prefix sums over j = 1..n-2
    for (int j = 0; j < m - 1; ++j) {
        sum += path.steps[j];
        if (sum < 0) inner_nonneg = false;
    }
    const int total = m > 0 ? sum + path.steps[m - 1] : 0;
    if (inner_nonneg && total == -1) return PathClass::Motzkin;
    if (inner_nonneg && total >= 0) return PathClass::Positive;
    return PathClass::Neither;
}

int horizontal_step_count(const WellLabelledPath& path) {
    return static_cast<int>(std::count(path.steps.begin(), path.steps.end(), Step{0}));
}

int final_height(const WellLabelledPath& path) {
    int sum = 0;
    for (Step s : path.steps) sum += s;
    return sum;
}

WellLabelledPath reverse_path(const WellLabelledPath& path) {
    WellLabelledPath out;
    out.labels.assign(path.labels.rbegin(), path.labels.rend());
    out.steps.reserve(path.steps.size());
    for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it)
        out.steps.push_back(static_cast<Step>(-*it));
    return out;
}

WellLabelledPath path_from_permutation(std::span<const int> perm) {
    std::vector<int> labels(perm.begin(), perm.end());
    if (!is_permutation_of_1_to_n(labels))
        throw PathError(PathError::Code::NotAPermutation,
                        "input is not a permutation of {1..n}");
    std::vector<Step> steps;
    steps.reserve(labels.size() > 0 ? labels.size() - 1 : 0);
    for (size_t i = 0; i + 1 < labels.size(); ++i)
        steps.push_back(labels[i] < labels[i + 1] ? Step{-1} : Step{+1});
    return WellLabelledPath{std::move(steps), std::move(labels)};
}

const char* to_string(PathClass c) {
    switch (c) {
        case PathClass::Positive: return "positive";
        case PathClass::Motzkin: return "motzkin";
        case PathClass::Neither: return "neither";
    }
    return "?";
}

}  // namespace wellpath
