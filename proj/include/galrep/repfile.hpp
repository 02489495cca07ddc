#ifndef GALREP_REPFILE_HPP
#define GALREP_REPFILE_HPP

#include <stdexcept>
#include <string>

#include "galrep/poteq.hpp"

namespace galrep {

/// Parse / schema failure with a stable machine-readable code.
struct RepFileError : std::runtime_error {
  enum class Code {
    bad_json,
    schema_violation,
    decimal_literal,
    entry_length_mismatch,
    non_invertible_generator,
  };
  RepFileError(Code code_, const std::string& what) : std::runtime_error(what), code(code_) {}
  Code code;
};

/// Parses the representation-file JSON text into a validated MatRep
/// (matrices in canonical reduced cyclotomic form). Throws RepFileError.
MatRep parse_rep_text(const std::string& text);

/// Reads and parses a representation file from disk.
MatRep parse_rep_file(const std::string& path);

/// Canonical serialization; parse(serialize(r)) == r and serialization of a
/// parsed canonical file is byte-identical.
std::string serialize_rep(const MatRep& rep);

}  // namespace galrep

#endif
