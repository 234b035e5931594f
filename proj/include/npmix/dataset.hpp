#pragma once

#include "npmix/types.hpp"

namespace npmix {

// CSV schema: header "id,time,obs,dose".  A row with nonzero dose is a
// dose event (obs must be empty); any other row is an observation, with
// an empty obs field marking a missing value.  Rows are grouped by id and
// observation times must be strictly increasing per subject.
std::vector<Subject> parse_dataset_text(const std::string& text, const std::string& origin);
std::vector<Subject> parse_dataset(const std::string& path);

std::string format_dataset(const std::vector<Subject>& subjects);
void write_dataset(const std::vector<Subject>& subjects, const std::string& path);

// FNV-1a hash of the serialized dataset, recorded in result files.
std::string dataset_hash(const std::string& csv_text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace npmix
