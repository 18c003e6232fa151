#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "pls/sentence.hpp"

namespace pls::testing {

// Deterministic corpus for the oracle suite: more than 500 distinct
// sentences with at most two superposition nodes each, atoms drawn from
// {p,q,r}, plus a few named axiom-scheme instances that desugar to more
// superpositions.  Every member keeps its negation-closed relevant universe
// within six sentences.
std::vector<Sentence> oracle_corpus();

// Random sentence over atoms {p,q,r} and constants, with at most max_sups
// superposition nodes (counting those introduced by the dual connective).
Sentence random_sentence(std::mt19937& rng, int max_sups);

// Random classical sentence over {p,q,r} and constants.
Sentence random_classical(std::mt19937& rng);

// Random duplicate-free sequence of classical sentences, non-empty.
std::vector<Sentence> random_order(std::mt19937& rng, std::size_t max_size);

}  // namespace pls::testing
