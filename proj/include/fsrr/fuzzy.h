/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_FUZZY_H
#define FSRR_FUZZY_H

#include "fsrr/types.h"

#include <array>
#include <cstdint>
#include <string_view>

namespace fsrr
{

/// Ordinal premise/consequent grade, a < b < c < d.
enum class FuzzyGrade : uint8_t
{
    A = 0,
    B = 1,
    C = 2,
    D = 3,
};

char ToChar(FuzzyGrade g);
FuzzyGrade GradeFromIndex(int index);

/// Grade of x in [0, 1] by quarters; [0,.25) a, [.25,.5) b, [.5,.75) c, [.75,1] d.
FuzzyGrade FuzzifyUnit(double x, ClampCounter* clamps = nullptr);

/// Same quartering over [0, maxval]. maxval == 0 always yields a.
FuzzyGrade FuzzifyCdht(double x, double maxval, ClampCounter* clamps = nullptr);

enum class RuleBase : uint8_t
{
    Temp1 = 1, ///< columns RTR, rows AST
    Tq = 2,    ///< columns temp1, rows CDHT
    Pq = 3,    ///< columns DECR, rows DR
    Delay = 4, ///< columns TQ, rows PQ
};

/**
 * Printed layout of one rule base: rows[r][c] is the consequent for row
 * grade r and column grade c.
 */
struct RuleTableLayout
{
    std::string_view title;
    std::string_view columnInput;
    std::string_view rowInput;
    std::array<std::string_view, 4> rows;
};

const RuleTableLayout& Layout(RuleBase table);

/// Looks up (column input, row input) in the given rule base.
FuzzyGrade Lookup(RuleBase table, FuzzyGrade column, FuzzyGrade row);

inline FuzzyGrade
Table1(FuzzyGrade rtr, FuzzyGrade ast)
{
    return Lookup(RuleBase::Temp1, rtr, ast);
}

inline FuzzyGrade
Table2(FuzzyGrade temp1, FuzzyGrade cdht)
{
    return Lookup(RuleBase::Tq, temp1, cdht);
}

inline FuzzyGrade
Table3(FuzzyGrade decr, FuzzyGrade dr)
{
    return Lookup(RuleBase::Pq, decr, dr);
}

inline FuzzyGrade
Table4(FuzzyGrade tq, FuzzyGrade pq)
{
    return Lookup(RuleBase::Delay, tq, pq);
}

struct CrispInputs
{
    double rtr{0.0};
    double ast{0.0};
    double cdht{0.0};
    double maxval{0.0};
    double decr{0.0};
    double dr{0.0};
};

struct ControllerTrace
{
    FuzzyGrade rtrGrade{FuzzyGrade::A};
    FuzzyGrade astGrade{FuzzyGrade::A};
    FuzzyGrade cdhtGrade{FuzzyGrade::A};
    FuzzyGrade temp1{FuzzyGrade::A};
    FuzzyGrade tq{FuzzyGrade::A};
    FuzzyGrade decrGrade{FuzzyGrade::A};
    FuzzyGrade drGrade{FuzzyGrade::A};
    FuzzyGrade pq{FuzzyGrade::A};
    FuzzyGrade delay{FuzzyGrade::A};

    bool operator==(const ControllerTrace&) const = default;
};

/// Runs the time-efficiency, position-efficiency and scheduler rule chain.
ControllerTrace Evaluate(const CrispInputs& in, ClampCounter* clamps = nullptr);

} // namespace fsrr

#endif // FSRR_FUZZY_H
