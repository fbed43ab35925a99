// Copyright 2026 The lexcov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXCOV_ERROR_HPP
#define LEXCOV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexcov {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
      public:
	using std::runtime_error::runtime_error;
};

/// Environment failures (unreadable or unwritable files). The CLI maps
/// these to exit code 1; everything else derived from Error maps to 2.
class IoError : public Error {
      public:
	using Error::Error;
};

/// A DELAF line that does not follow the entry grammar.
class MalformedEntry : public Error {
      public:
	MalformedEntry(std::string reason, std::string line, std::size_t column,
	               std::size_t line_number = 0);

	auto reason() const -> const std::string& { return reason_; }
	auto line() const -> const std::string& { return line_; }
	/// 1-based byte column of the offending position.
	auto column() const -> std::size_t { return column_; }
	/// 1-based line number inside the source file, 0 when unknown.
	auto line_number() const -> std::size_t { return line_number_; }

	auto with_line_number(std::size_t n) const -> MalformedEntry;

      private:
	std::string reason_;
	std::string line_;
	std::size_t column_;
	std::size_t line_number_;
};

class InvalidUtf8 : public Error {
      public:
	explicit InvalidUtf8(std::size_t byte_offset);
	auto byte_offset() const -> std::size_t { return offset_; }

      private:
	std::size_t offset_;
};

class EmptyLexicon : public Error {
      public:
	EmptyLexicon() : Error("no dictionary entries to compile") {}
};

class FormatVersionMismatch : public Error {
      public:
	using Error::Error;
};

class CorruptFile : public Error {
      public:
	using Error::Error;
};

class PolicyMismatch : public Error {
      public:
	using Error::Error;
};

class MismatchedCorpus : public Error {
      public:
	using Error::Error;
};

class ConfigError : public Error {
      public:
	using Error::Error;
};

} // namespace lexcov

#endif // LEXCOV_ERROR_HPP
