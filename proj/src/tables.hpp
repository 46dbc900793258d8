#pragma once

#include <cstddef>

// Generated data tables: outer-expansion kernels, constant registry,
// aggregate definitions, closed-form term lists and the published
// percentage-error tables.  See scripts/gen_tables.py.

namespace bisphere::detail {

struct KernelPoly {
    int j;         // multiplies e^{4 j m}
    double a[4];   // polynomial in m, ascending
};

struct KernelSpec {
    const char* name;
    int c;   // e^{c m} prefactor
    int d;   // (e^{4m} - 1)^d denominator
    int npolys;
    KernelPoly polys[5];
};

struct CounterTermSpec {
    double coeff;  // subtract coeff / m^power
    int power;     // 0..3
};

enum KernelDomain { kDom01 = 0, kDom1Inf = 1, kDom0Inf = 2 };

struct ConstantSpec {
    const char* label;
    int kernel;  // index into kernels()
    int domain;
    int ncts;
    CounterTermSpec cts[4];
    // Maclaurin coefficients (m^0..m^16) of the subtracted integrand; only
    // meaningful for domains touching zero.
    double maclaurin[17];
    double paper_value;
    double paper_tol;
    bool known_anomalous;
};

struct AggregateSpec {
    const char* label;
    const char* part1;
    const char* part2;
    double paper_value;
    double paper_tol;
    bool known_anomalous;
};

enum FormTermKind { kFtRat = 0, kFtPi2 = 1, kFtGamma = 2, kFtConst = 3 };

struct FormTerm {
    int kind;
    double coeff;       // rational coefficient (sign included); +-1 for kFtConst
    int power;          // eta1 exponent
    int gamma_shift;    // kFtGamma: value of s in (Gamma - s)
    const char* label;  // kFtConst: constant-table label
};

struct FormSpec {
    const char* id;  // series key
    int nterms;
    FormTerm terms[13];
};

struct PctRow {
    const char* id;
    double at_1e3;
    double at_1e2;
    int category;
};

const KernelSpec* kernels(std::size_t* n);
const ConstantSpec* constants(std::size_t* n);
const AggregateSpec* aggregates(std::size_t* n);
const FormSpec* forms(std::size_t* n);
const PctRow* pct_table(std::size_t* n);
int kernel_index(const char* name);

}  // namespace bisphere::detail
