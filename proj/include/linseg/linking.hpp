#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linseg/terms.hpp"

namespace linseg {

/// A chain of a term's occurrences with at most `link_length` sentences
/// between neighbours.
struct Link {
  std::size_t first_sentence = 0;
  std::size_t last_sentence = 0;
  std::size_t first_paragraph = 0;
  std::size_t last_paragraph = 0;
  std::size_t occurrences = 0;

  friend bool operator==(const Link&, const Link&) = default;
};

enum class ParagraphRole { Front, During, Rear, NoLink };

/// Role contributions a paragraph received from one term's links. A paragraph
/// can be rear of one link and front of the next.
struct RoleCounts {
  int front = 0;
  int during = 0;
  int rear = 0;

  bool no_link() const noexcept { return front == 0 && during == 0 && rear == 0; }
  friend bool operator==(const RoleCounts&, const RoleCounts&) = default;
};

/// Greedy left-to-right chaining: an occurrence in sentence j joins the link
/// ending in sentence i iff j - i - 1 <= link_length. Every occurrence lands
/// in exactly one link. Occurrences must be sorted by sentence.
std::vector<Link> build_links(const Term& term, int link_length);

/// Paragraph roles for one term. A link's first paragraph is Front, the rest
/// of its paragraphs are During and the paragraph after it (if any) is Rear.
/// Links made of a single occurrence are unlinked and contribute nothing
/// unless `keep_unlinked` is set.
std::vector<RoleCounts> label_paragraphs(std::span<const Link> links, std::size_t paragraph_count,
                                         bool keep_unlinked = false);

/// Dominant role per paragraph: front over rear over during.
ParagraphRole dominant_role(const RoleCounts& counts);

/// One letter per paragraph (f, d, r, n), e.g. "nfdrnfd".
std::string role_line(std::span<const RoleCounts> roles);

}  // namespace linseg
