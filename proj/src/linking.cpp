#include "linseg/linking.hpp"

namespace linseg {

std::vector<Link> build_links(const Term& term, int link_length) {
  std::vector<Link> links;
  for (const Occurrence& occ : term.occurrences) {
    if (!links.empty()) {
      Link& cur = links.back();
      // Same-sentence occurrences have j - i - 1 = -1 and always join.
      const long gap = static_cast<long>(occ.sentence) - static_cast<long>(cur.last_sentence) - 1;
      if (gap <= link_length) {
        cur.last_sentence = occ.sentence;
        cur.last_paragraph = occ.paragraph;
        ++cur.occurrences;
        continue;
      }
    }
    links.push_back(Link{occ.sentence, occ.sentence, occ.paragraph, occ.paragraph, 1});
  }
  return links;
}

std::vector<RoleCounts> label_paragraphs(std::span<const Link> links, std::size_t paragraph_count,
                                         bool keep_unlinked) {
  std::vector<RoleCounts> roles(paragraph_count);
  for (const Link& link : links) {
    if (link.occurrences < 2 && !keep_unlinked) continue;
    roles[link.first_paragraph].front += 1;
    for (std::size_t p = link.first_paragraph + 1; p <= link.last_paragraph; ++p) roles[p].during += 1;
    if (link.last_paragraph + 1 < paragraph_count) roles[link.last_paragraph + 1].rear += 1;
  }
  return roles;
}

ParagraphRole dominant_role(const RoleCounts& counts) {
  if (counts.front) return ParagraphRole::Front;
  if (counts.rear) return ParagraphRole::Rear;
  if (counts.during) return ParagraphRole::During;
  return ParagraphRole::NoLink;
}

std::string role_line(std::span<const RoleCounts> roles) {
  std::string out;
  out.reserve(roles.size());
  for (const auto& r : roles) {
    switch (dominant_role(r)) {
      case ParagraphRole::Front: out += 'f'; break;
      case ParagraphRole::During: out += 'd'; break;
      case ParagraphRole::Rear: out += 'r'; break;
      case ParagraphRole::NoLink: out += 'n'; break;
    }
  }
  return out;
}

}  // namespace linseg
