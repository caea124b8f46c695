#ifndef CARTCOH_COLLAPSE_H_
#define CARTCOH_COLLAPSE_H_

#include <cstddef>

#include "cartcoh/arrow.h"
#include "cartcoh/object.h"

namespace cartcoh {

// Data showing that f = g, for f and g with different graphs, forces
// k1_{p,p} = k2_{p,p}: with f' and g' the instances of f and g where every
// letter is p,
//   j . f' . h = k1_{p,p}   and   j . g' . h = k2_{p,p}
// hold in the free category.
struct CollapseWitness {
  Letter letter;             // p
  std::size_t position = 0;  // least codomain position where the graphs differ
  Arrow f_subst;             // f' : A' -> B'
  Arrow g_subst;             // g' : A' -> B'
  Arrow h;                   // p * p -> A'
  Arrow j;                   // B' -> p
  Arrow lhs_normal;          // normal form of j . f' . h
  Arrow rhs_normal;          // normal form of j . g' . h
};

// Throws kAlreadyEqual when f and g have the same graph, and kTypeMismatch
// when their types differ.
CollapseWitness collapse_witness(const Arrow& f, const Arrow& g, Mode mode);

// Recomputes the composite graphs and normal forms from scratch. Never
// throws; any failure, including an ill-typed composite, yields false.
bool verify_witness(const CollapseWitness& w);

}  // namespace cartcoh

#endif  // CARTCOH_COLLAPSE_H_
