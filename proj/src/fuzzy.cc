/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/fuzzy.h"

#include <stdexcept>

namespace fsrr
{

namespace
{

// Rule bases exactly as printed: one string per row grade (a..d),
// one character per column grade (a..d).
constexpr std::array<RuleTableLayout, 4> kRuleBases{{
    {"Table 1: RTR x AST -> temp1", "RTR", "AST", {"abbb", "bbbc", "bbcd", "bcdd"}},
    {"Table 2: temp1 x CDHT -> TQ", "temp1", "CDHT", {"aabc", "abcc", "abcd", "bcdd"}},
    {"Table 3: DECR x DR -> PQ", "DECR", "DR", {"ddcb", "dccb", "ccba", "bbba"}},
    {"Table 4: TQ x PQ -> delay", "TQ", "PQ", {"aabc", "aacd", "bbcd", "bbdd"}},
}};

constexpr bool
TablesWellFormed()
{
    for (const auto& t : kRuleBases)
    {
        for (auto row : t.rows)
        {
            if (row.size() != 4)
            {
                return false;
            }
            for (char c : row)
            {
                if (c < 'a' || c > 'd')
                {
                    return false;
                }
            }
        }
    }
    return true;
}

static_assert(TablesWellFormed());

FuzzyGrade
Quarter(double fraction)
{
    if (fraction < 0.25)
    {
        return FuzzyGrade::A;
    }
    if (fraction < 0.5)
    {
        return FuzzyGrade::B;
    }
    if (fraction < 0.75)
    {
        return FuzzyGrade::C;
    }
    return FuzzyGrade::D;
}

} // namespace

char
ToChar(FuzzyGrade g)
{
    return static_cast<char>('a' + static_cast<int>(g));
}

FuzzyGrade
GradeFromIndex(int index)
{
    if (index < 0 || index > 3)
    {
        throw std::out_of_range("fuzzy grade index must be in [0, 3]");
    }
    return static_cast<FuzzyGrade>(index);
}

FuzzyGrade
FuzzifyUnit(double x, ClampCounter* clamps)
{
    return Quarter(ClampCounted(x, 0.0, 1.0, clamps));
}

FuzzyGrade
FuzzifyCdht(double x, double maxval, ClampCounter* clamps)
{
    if (maxval <= 0.0)
    {
        return FuzzyGrade::A;
    }
    double clamped = ClampCounted(x, 0.0, maxval, clamps);
    // Compare against the quarter points of maxval directly so that
    // x == maxval / 4 lands on b without a division round-off.
    if (clamped < maxval / 4)
    {
        return FuzzyGrade::A;
    }
    if (clamped < maxval / 2)
    {
        return FuzzyGrade::B;
    }
    if (clamped < 3 * maxval / 4)
    {
        return FuzzyGrade::C;
    }
    return FuzzyGrade::D;
}

const RuleTableLayout&
Layout(RuleBase table)
{
    return kRuleBases.at(static_cast<size_t>(table) - 1);
}

FuzzyGrade
Lookup(RuleBase table, FuzzyGrade column, FuzzyGrade row)
{
    const auto& layout = Layout(table);
    char cell = layout.rows[static_cast<size_t>(row)][static_cast<size_t>(column)];
    return static_cast<FuzzyGrade>(cell - 'a');
}

ControllerTrace
Evaluate(const CrispInputs& in, ClampCounter* clamps)
{
    ControllerTrace t;
    t.rtrGrade = FuzzifyUnit(in.rtr, clamps);
    t.astGrade = FuzzifyUnit(in.ast, clamps);
    t.cdhtGrade = FuzzifyCdht(in.cdht, in.maxval, clamps);
    t.temp1 = Table1(t.rtrGrade, t.astGrade);
    t.tq = Table2(t.temp1, t.cdhtGrade);

    t.decrGrade = FuzzifyUnit(in.decr, clamps);
    t.drGrade = FuzzifyUnit(in.dr, clamps);
    t.pq = Table3(t.decrGrade, t.drGrade);

    t.delay = Table4(t.tq, t.pq);
    return t;
}

} // namespace fsrr
