#include "tlwb/timed_word.hpp"

#include <cctype>
#include <sstream>

#include "tlwb/errors.hpp"

namespace tlwb {

bool valid_letter(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::islower(u) && !std::isdigit(u) && c != '_') return false;
  }
  return true;
}

TimedWord TimedWord::from_events(std::vector<Event> events) {
  if (events.empty()) throw DomainError("timed word must have at least one event");
  TimedWord w;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    if (!valid_letter(e.letter))
      throw DomainError("bad letter '" + e.letter + "' at position " +
                        std::to_string(i + 1));
    if (e.time.is_negative())
      throw DomainError("negative timestamp at position " + std::to_string(i + 1));
    if (i > 0) {
      if (e.time < events[i - 1].time)
        throw DomainError("timestamps decrease at position " + std::to_string(i + 1));
      if (e.time == events[i - 1].time) w.strict_ = false;
    }
  }
  w.anchored_ = events.front().time == Rational(0);
  w.events_ = std::move(events);
  return w;
}

const Event& TimedWord::at(std::size_t pos) const {
  if (pos < 1 || pos > events_.size())
    throw DomainError("position " + std::to_string(pos) + " out of range 1.." +
                      std::to_string(events_.size()));
  return events_[pos - 1];
}

std::vector<std::string> TimedWord::untime() const {
  std::vector<std::string> out;
  out.reserve(events_.size());
  for (const Event& e : events_) out.push_back(e.letter);
  return out;
}

std::string TimedWord::untime_joined() const {
  std::string out;
  for (const Event& e : events_) out += e.letter;
  return out;
}

TimedWord parse_word(const std::string& text) {
  std::vector<Event> events;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string letter, time, extra;
    if (!(ls >> letter)) continue;  // blank or comment-only line
    if (!(ls >> time))
      throw ParseError("line " + std::to_string(lineno) + ": missing timestamp");
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing junk '" +
                       extra + "'");
    if (!valid_letter(letter))
      throw ParseError("line " + std::to_string(lineno) + ": bad letter '" +
                       letter + "'");
    Rational t;
    try {
      t = Rational::parse(time);
    } catch (const Error&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad timestamp '" +
                       time + "'");
    }
    events.push_back({letter, t});
  }
  try {
    return TimedWord::from_events(std::move(events));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid word: ") + e.what());
  }
}

std::string serialize_word(const TimedWord& w) {
  std::string out;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    out += w.letter(i);
    out += ' ';
    out += w.time(i).str();
    out += '\n';
  }
  return out;
}

}  // namespace tlwb
