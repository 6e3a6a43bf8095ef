#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linseg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& id)
      : Error("document '" + id + "' contains no words") {}
};

/// A file could not be parsed. `line` is 1-based; 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class MalformedLexiconLine : public ParseError {
 public:
  MalformedLexiconLine(std::string source, std::size_t line)
      : ParseError(std::move(source), line, "malformed lexicon line (expected surface<TAB>CAT[,CAT...])") {}
};

class UnknownCategoryCode : public ParseError {
 public:
  UnknownCategoryCode(std::string source, std::size_t line, const std::string& code)
      : ParseError(std::move(source), line, "unknown category code '" + code + "'") {}
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientCorpus : public Error {
 public:
  InsufficientCorpus(std::size_t documents, std::size_t folds)
      : Error("corpus has " + std::to_string(documents) + " documents but " +
              std::to_string(folds) + " folds were requested") {}
};

class MissingJudgments : public Error {
 public:
  explicit MissingJudgments(std::string doc_id)
      : Error("no judgments for document '" + doc_id + "'"), doc_id_(std::move(doc_id)) {}

  const std::string& doc_id() const noexcept { return doc_id_; }

 private:
  std::string doc_id_;
};

}  // namespace linseg
