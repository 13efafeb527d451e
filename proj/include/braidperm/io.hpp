#ifndef BRAIDPERM_IO_HPP
#define BRAIDPERM_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "braidperm/abelian.hpp"
#include "braidperm/braid_image.hpp"
#include "braidperm/enumerate.hpp"
#include "braidperm/shuffle.hpp"

namespace braidperm
{

using json = nlohmann::ordered_json;

/**
 * Shuffle specs on the wire:
 *
 *   { "d": 2, "tau": "(1 2)", "u": [[1, 1]],
 *     "choices": [{"alpha_min": 1, "i1": 1, "j1": 1}] }
 *
 * Cycles of tau are named by their least element. "u" lists pairs
 * (alpha, u(alpha)); unlisted cycles are fixed. Missing choices default to
 * least elements. Throws InvalidSpec or ParseError.
 */
ShuffleSpec spec_from_json(json const &j);
json spec_to_json(ShuffleSpec const &spec);

/**
 * Spec from command-line style text. u is "id" or cycle notation on least
 * elements of the cycles of tau, so "(1 3)" swaps the cycles containing 1
 * and 3. i1 and j1 list one entry per cycle of tau in order of least
 * element; empty lists select least elements.
 */
ShuffleSpec spec_from_text(std::size_t d, std::string const &tau, std::string const &u,
                           std::vector<Point> const &i1 = {},
                           std::vector<Point> const &j1 = {});

json image_to_json(BraidImage const &image);

/// Row-major entries with the moduli of the coordinates.
json matrix_to_json(ModuleMatrix const &m);

json enumeration_to_json(EnumerationResult const &r);

std::string to_string(BigInt const &value);

} // namespace braidperm

#endif // BRAIDPERM_IO_HPP
