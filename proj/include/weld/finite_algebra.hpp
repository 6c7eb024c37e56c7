// Finite coloring targets: multiplication-table groups and quandles, with the
// built-in palette used by the invariant battery.

#pragma once

#include <string>
#include <vector>

namespace weld {

// Validated multiplication-table group. Element 0..n-1, table[a][b] = a*b.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);

    const std::string& name() const { return name_; }
    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    // h^-1 a h
    int conjugate(int a, int h) const { return mul(mul(inverse_[h], a), h); }
    int power(int a, int e) const;

    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }

private:
    std::string name_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> classes_;
};

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n, n >= 3
FiniteGroup symmetric_group(int k);  // k = 3 or 4
FiniteGroup alternating_group_4();

// Validated quandle: a*a = a, b -> op(a,b)... right translations by b are
// bijections with inverse inv_op, and op is right self-distributive.
class FiniteQuandle {
public:
    FiniteQuandle(std::string name, std::vector<std::vector<int>> op);

    const std::string& name() const { return name_; }
    int order() const { return static_cast<int>(op_.size()); }
    int op(int a, int b) const { return op_[a][b]; }      // a * b
    int inv_op(int a, int b) const { return inv_[a][b]; }  // a *^-1 b

private:
    std::string name_;
    std::vector<std::vector<int>> op_;
    std::vector<std::vector<int>> inv_;
};

// Dihedral quandle R_n on Z/n with a*b = 2b - a.
FiniteQuandle dihedral_quandle(int n);

struct Palette {
    std::string version;
    std::vector<FiniteGroup> groups;
    std::vector<FiniteQuandle> quandles;

    static const Palette& default_palette();
    // Restriction to the named targets; throws std::invalid_argument for
    // names not present in this palette.
    Palette subset(const std::vector<std::string>& group_names,
                   const std::vector<std::string>& quandle_names) const;
};

}  // namespace weld
