#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ktri/formula.hpp"
#include "ktri/model.hpp"

namespace ktri::testing {

using Rng = std::mt19937_64;

/// Random formula of depth at most `depth`; ▲ or □ per `lang`.
Formula random_formula(Rng& rng, Language lang, const std::vector<std::string>& vars, int depth);

/// Random model; each edge present with probability `edge_p`.
Model random_model(Rng& rng, std::size_t worlds, const std::vector<std::string>& vars, double edge_p = 0.4);

/// Hand-written sequents followed by seeded random ones; all in L_tri with
/// ▲-depth at most 3 and at most two variables.
std::vector<Sequent> corpus();

/// Outcome of the three equivalent readings of validity for a sequent,
/// each quantified over all models with 1..max_worlds worlds.
struct ContrapositionCheck {
  bool truth_preserved = true;          // premise true => conclusion true
  bool non_falsity_preserved = true;    // premise not false => conclusion not false
  bool contraposed_preserved = true;    // ~conclusion true => ~premise true
  std::size_t models = 0;
  bool agree() const { return truth_preserved == non_falsity_preserved && truth_preserved == contraposed_preserved; }
};
ContrapositionCheck contraposition_check(const Sequent& s, std::size_t max_worlds);

/// The four value-transfer clauses between m and its dual at every world.
bool dual_clauses_hold(const Model& m, const Formula& f);

/// Directory with the shipped figure models.
std::string data_dir();

}  // namespace ktri::testing
