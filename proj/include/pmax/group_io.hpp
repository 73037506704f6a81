#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pmax/presentation.hpp"

namespace pmax {

/// Group files are JSON documents:
///
///   {
///     "format": "pmax-pcgroup/1",
///     "p": 5, "n": 7,
///     "labels": ["s", "s1", ...],              (optional)
///     "power_tails": [[0,0,...], ...],          n rows of n residues
///     "commutator_tails": [{"j": 2, "i": 1, "tail": [...]}, ...]
///   }
///
/// Generator indices in the file are 1-based; pairs satisfy j > i. Pairs not
/// listed have trivial tails. See docs/group-file.md.
inline constexpr std::string_view kGroupFormat = "pmax-pcgroup/1";

std::string to_group_file(const PcPresentation& pres);
PcPresentation parse_group_file(std::string_view text);

PcPresentation read_group_file(const std::filesystem::path& path);
void write_group_file(const std::filesystem::path& path, const PcPresentation& pres);

std::string read_text(const std::filesystem::path& path);

/// 64-bit FNV-1a digest as 16 hex digits.
std::string digest_hex(std::string_view bytes);

}  // namespace pmax
