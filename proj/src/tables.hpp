// Copyright 2026 The rsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSYM_TABLES_HPP
#define RSYM_TABLES_HPP

#include <cstddef>
#include <vector>

#include "numeric.hpp"

namespace rsym {

enum class FusionProvenance { FromVerlinde, FromInput };

/// N^{a,b}_c for a rank-r category, indexed (a, b, c).
class FusionTensor {
public:
    FusionTensor() = default;
    explicit FusionTensor(std::size_t rank, FusionProvenance provenance = FusionProvenance::FromInput)
        : rank_(rank), provenance_(provenance), data_(rank * rank * rank, 0) {
    }

    std::size_t rank() const noexcept { return rank_; }
    FusionProvenance provenance() const noexcept { return provenance_; }

    int operator()(std::size_t a, std::size_t b, std::size_t c) const {
        return data_[(a * rank_ + b) * rank_ + c];
    }
    int &at(std::size_t a, std::size_t b, std::size_t c) {
        return data_[(a * rank_ + b) * rank_ + c];
    }

    /// Entrywise comparison; provenance is ignored.
    bool same_entries(const FusionTensor &other) const {
        return rank_ == other.rank_ && data_ == other.data_;
    }

private:
    std::size_t rank_ = 0;
    FusionProvenance provenance_ = FusionProvenance::FromInput;
    std::vector<int> data_;
};

enum class IndicatorProvenance { FromModularFormula, FromCenterFormula, FromInput };

/// Entry (c, a) holds the generalized indicator nu_{2,1}^{iota(c)}(a).
struct IndicatorTable {
    ComplexMatrix values;
    IndicatorProvenance provenance = IndicatorProvenance::FromInput;

    std::size_t rank() const noexcept { return values.rows(); }
    Complex operator()(std::size_t c, std::size_t a) const { return values(c, a); }
};

}  // namespace rsym

#endif
