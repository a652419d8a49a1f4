// Copyright 2026 The ann Authors.
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

#include <charconv>
#include <map>
#include <set>

#include "ann/error.hpp"
#include "ann/serialization.hpp"
#include "ann/text.hpp"

namespace ann {

using nlohmann::json;

const std::string* XmlElement::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes)
    if (k == key) return &v;
  return nullptr;
}

// -- writer ---------------------------------------------------------------

std::string xml_escape(std::string_view text, bool attribute) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += attribute ? "&quot;" : "\"";
        break;
      case '\t':
        out += attribute ? "&#9;" : "\t";
        break;
      case '\n':
        out += attribute ? "&#10;" : "\n";
        break;
      case '\r':
        out += "&#13;";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20)
          throw InvalidValue("xml", "control character U+" + std::to_string(int(c)) +
                                        " cannot be represented in XML 1.0");
        out += c;
    }
  }
  return out;
}

namespace {

class XmlWriter {
 public:
  void open(std::string_view name, std::initializer_list<std::pair<std::string_view, std::string_view>> attrs,
            bool empty = false) {
    indent();
    out_ += '<';
    out_ += name;
    for (const auto& [k, v] : attrs) attr(k, v);
    out_ += empty ? "/>\n" : ">\n";
    if (!empty) ++depth_;
    just_opened_ = !empty;
  }

  // Optional attributes are passed as nullptr-able pointers.
  void open_opt(std::string_view name, std::vector<std::pair<std::string_view, const std::string*>> attrs,
                bool empty = false) {
    indent();
    out_ += '<';
    out_ += name;
    for (const auto& [k, v] : attrs)
      if (v) attr(k, *v);
    out_ += empty ? "/>\n" : ">\n";
    if (!empty) ++depth_;
    just_opened_ = !empty;
  }

  // An element closed right after opening collapses to <name .../>.
  void close(std::string_view name) {
    --depth_;
    if (just_opened_) {
      out_.replace(out_.size() - 2, 2, "/>\n");
      just_opened_ = false;
      return;
    }
    indent();
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

  void leaf(std::string_view name, std::vector<std::pair<std::string_view, std::string>> attrs,
            std::string_view text) {
    just_opened_ = false;
    indent();
    out_ += '<';
    out_ += name;
    for (const auto& [k, v] : attrs) attr(k, v);
    out_ += '>';
    out_ += xml_escape(text, false);
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

  std::string& str() { return out_; }

 private:
  void attr(std::string_view k, std::string_view v) {
    out_ += ' ';
    out_ += k;
    out_ += "=\"";
    out_ += xml_escape(v, true);
    out_ += '"';
  }
  void indent() { out_.append(2 * depth_, ' '); }

  std::string out_;
  int depth_ = 0;
  bool just_opened_ = false;
};

void write_participant_list(XmlWriter& w, const std::string& name, const json& list) {
  w.open("list", {{"name", name}});
  for (const auto& p : list) {
    std::vector<std::pair<std::string_view, const std::string*>> attrs;
    std::vector<std::string> values;
    values.reserve(4);
    for (const char* key : {"pseudonym", "role", "age_band", "gender"}) {
      if (p.contains(key)) {
        values.push_back(p.at(key).get<std::string>());
        attrs.emplace_back(key, &values.back());
      }
    }
    w.open_opt("participant", attrs, true);
  }
  w.close("list");
}

// Field layout: strings -> <field>, numbers -> <field type="number">,
// string lists -> <list><item/></list>, participant lists -> <list><participant/></list>,
// string maps -> <map><entry key=""/></map>.
void write_record(XmlWriter& w, const MetadataRecord& record) {
  json j = to_json(record);
  w.open("meta", {{"id", record.id}, {"kind", to_string(record.kind())}});
  for (const auto& [key, value] : j.items()) {
    if (key == "id" || key == "kind") continue;
    if (value.is_string()) {
      w.leaf("field", {{"name", key}}, value.get<std::string>());
    } else if (value.is_number()) {
      w.leaf("field", {{"name", key}, {"type", "number"}}, value.dump());
    } else if (value.is_array()) {
      bool objects = !value.empty() && value.front().is_object();
      bool participants = key == "participants" || key == "bystanders";
      if (objects || participants) {
        write_participant_list(w, key, value);
      } else {
        w.open("list", {{"name", key}});
        for (const auto& item : value) w.leaf("item", {}, item.get<std::string>());
        w.close("list");
      }
    } else if (value.is_object()) {
      w.open("map", {{"name", key}});
      for (const auto& [k, v] : value.items()) w.leaf("entry", {{"key", k}}, v.get<std::string>());
      w.close("map");
    }
  }
  w.close("meta");
}

}  // namespace

std::string export_xml(const Corpus& corpus, const Catalog& catalog, const Tagset& tagset) {
  ValidationReport report = validate_catalog(corpus, catalog);
  if (report.has_errors()) throw CatalogInvalid(report.summary());

  std::map<SubcorpusPath, std::vector<const Document*>> groups;
  for (const auto& d : corpus.documents) groups[d.subcorpus].push_back(&d);
  for (const auto& r : catalog.records())
    if (const auto* desc = std::get_if<DescriptiveMeta>(&r.body)) groups[desc->subcorpus];
  for (auto& [_, docs] : groups)
    std::sort(docs.begin(), docs.end(),
              [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });

  XmlWriter w;
  w.str() = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  w.open("corpus", {});
  for (const auto& [path, docs] : groups) {
    std::string path_str = path.str();
    w.open("subcorpus", {{"path", path_str}});
    for (const MetadataRecord* r : catalog.descriptive_for(path)) write_record(w, *r);
    for (const Document* d : docs) {
      w.open_opt("document", {{"id", &d->doc_id}, {"meta", d->metadata_ref.empty() ? nullptr : &d->metadata_ref}});
      if (const MetadataRecord* r = catalog.find(d->metadata_ref)) write_record(w, *r);
      for (const auto& s : d->sentences) {
        w.open("s", {{"id", s.id}, {"status", to_string(s.status)}, {"text", s.text}});
        for (const auto& t : s.tokens) {
          if (t.tag) {
            tagset.parse_tag(t.tag->convention);
            w.leaf("w", {{"tag", t.tag->convention}, {"prov", to_string(t.tag->provenance)}}, t.surface);
          } else {
            w.leaf("w", {}, t.surface);
          }
        }
        w.close("s");
      }
      w.close("document");
    }
    w.close("subcorpus");
  }
  w.close("corpus");
  return std::move(w.str());
}

// -- reader ---------------------------------------------------------------

namespace {

class XmlParser {
 public:
  explicit XmlParser(std::string_view in) : in_(in) {}

  XmlElement parse_document() {
    validate_utf8(in_);
    skip_misc();
    if (!peek('<')) fail("expected root element");
    XmlElement root = parse_element();
    skip_misc();
    if (pos_ != in_.size()) fail("content after the root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < in_.size(); ++i)
      if (in_[i] == '\n') ++line;
    throw ParseError(line, "xml: " + reason);
  }

  bool peek(char c) const { return pos_ < in_.size() && in_[pos_] == c; }
  bool peek(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }
  void expect(std::string_view s) {
    if (!peek(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }
  static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  void skip_ws() {
    while (pos_ < in_.size() && is_ws(in_[pos_])) ++pos_;
  }

  void skip_until(std::string_view end) {
    std::size_t p = in_.find(end, pos_);
    if (p == std::string_view::npos) fail("unterminated construct, missing '" + std::string(end) + "'");
    pos_ = p + end.size();
  }

  // Whitespace, comments, processing instructions and a DOCTYPE.
  void skip_misc() {
    for (;;) {
      skip_ws();
      if (peek("<?")) skip_until("?>");
      else if (peek("<!--")) skip_until("-->");
      else if (peek("<!DOCTYPE")) skip_until(">");
      else return;
    }
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (is_ws(c) || c == '=' || c == '>' || c == '/' || c == '<' || c == '"' || c == '\'') break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a name");
    return std::string(in_.substr(start, pos_ - start));
  }

  void append_utf8(std::string& out, uint32_t cp) {
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid character reference");
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  void parse_reference(std::string& out) {
    ++pos_;  // '&'
    std::size_t semi = in_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 10) fail("unterminated entity reference");
    std::string_view ref = in_.substr(pos_, semi - pos_);
    pos_ = semi + 1;
    if (ref == "amp") out += '&';
    else if (ref == "lt") out += '<';
    else if (ref == "gt") out += '>';
    else if (ref == "quot") out += '"';
    else if (ref == "apos") out += '\'';
    else if (ref.starts_with('#')) {
      uint32_t cp = 0;
      bool hex = ref.size() > 1 && ref[1] == 'x';
      std::string_view digits = ref.substr(hex ? 2 : 1);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, hex ? 16 : 10);
      if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size())
        fail("bad character reference");
      append_utf8(out, cp);
    } else {
      fail("unknown entity '&" + std::string(ref) + ";'");
    }
  }

  std::string parse_attribute_value() {
    if (!peek('"') && !peek('\'')) fail("expected quoted attribute value");
    char quote = in_[pos_++];
    std::string out;
    while (pos_ < in_.size() && in_[pos_] != quote) {
      char c = in_[pos_];
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        parse_reference(out);
        continue;
      }
      // Attribute-value normalization: literal whitespace becomes a space.
      out += (c == '\t' || c == '\n' || c == '\r') ? ' ' : c;
      ++pos_;
    }
    if (pos_ >= in_.size()) fail("unterminated attribute value");
    ++pos_;
    return out;
  }

  XmlElement parse_element() {
    expect("<");
    XmlElement el;
    el.name = parse_name();
    for (;;) {
      skip_ws();
      if (peek("/>")) {
        pos_ += 2;
        return el;
      }
      if (peek('>')) {
        ++pos_;
        break;
      }
      std::string key = parse_name();
      skip_ws();
      expect("=");
      skip_ws();
      if (el.attribute(key)) fail("duplicate attribute '" + key + "'");
      el.attributes.emplace_back(std::move(key), parse_attribute_value());
    }

    std::string text;
    for (;;) {
      if (pos_ >= in_.size()) fail("unterminated element <" + el.name + ">");
      if (peek("</")) {
        pos_ += 2;
        std::string name = parse_name();
        if (name != el.name) fail("mismatched </" + name + ">, expected </" + el.name + ">");
        skip_ws();
        expect(">");
        break;
      }
      if (peek("<!--")) {
        skip_until("-->");
      } else if (peek("<![CDATA[")) {
        pos_ += 9;
        std::size_t end = in_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        text.append(in_.substr(pos_, end - pos_));
        pos_ = end + 3;
      } else if (peek("<?")) {
        skip_until("?>");
      } else if (peek('<')) {
        el.children.push_back(parse_element());
      } else if (peek('&')) {
        parse_reference(text);
      } else {
        char c = in_[pos_++];
        if (c == '>' && text.size() >= 2 && text.ends_with("]]")) fail("']]>' in character data");
        text += c;
      }
    }
    if (el.children.empty()) {
      el.text = std::move(text);
    } else if (!trim(text).empty()) {
      fail("mixed content in <" + el.name + "> is not supported");
    }
    return el;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

const std::string& required_attr(const XmlElement& el, std::string_view key) {
  if (const std::string* v = el.attribute(key)) return *v;
  throw ParseError(0, "<" + el.name + "> lacks attribute '" + std::string(key) + "'");
}

json participant_json(const XmlElement& p) {
  json o = json::object();
  for (const auto& [k, v] : p.attributes) o[k] = v;
  return o;
}

MetadataRecord read_record(const XmlElement& meta) {
  json j = json::object();
  j["id"] = required_attr(meta, "id");
  j["kind"] = required_attr(meta, "kind");
  for (const auto& child : meta.children) {
    const std::string& name = required_attr(child, "name");
    if (child.name == "field") {
      const std::string* type = child.attribute("type");
      if (type && *type == "number") {
        try {
          j[name] = json::parse(child.text);
        } catch (const json::exception&) {
          throw ParseError(0, "field '" + name + "' is not a number");
        }
      } else {
        j[name] = child.text;
      }
    } else if (child.name == "list") {
      json arr = json::array();
      for (const auto& item : child.children) {
        if (item.name == "item") arr.push_back(item.text);
        else if (item.name == "participant") arr.push_back(participant_json(item));
        else throw ParseError(0, "unexpected <" + item.name + "> in <list>");
      }
      j[name] = std::move(arr);
    } else if (child.name == "map") {
      json obj = json::object();
      for (const auto& entry : child.children) obj[required_attr(entry, "key")] = entry.text;
      j[name] = std::move(obj);
    } else {
      throw ParseError(0, "unexpected <" + child.name + "> in <meta>");
    }
  }
  return record_from_json(j);
}

}  // namespace

XmlElement parse_xml(std::string_view xml) { return XmlParser(xml).parse_document(); }

XmlImport import_xml(std::string_view xml, const Tagset& tagset) {
  XmlElement root = parse_xml(xml);
  if (root.name != "corpus") throw ParseError(1, "root element must be <corpus>");

  XmlImport out;
  for (const auto& sub : root.children) {
    if (sub.name != "subcorpus") throw ParseError(0, "unexpected <" + sub.name + "> in <corpus>");
    SubcorpusPath path = SubcorpusPath::parse(required_attr(sub, "path"));
    for (const auto& el : sub.children) {
      if (el.name == "meta") {
        out.catalog.add(read_record(el));
        continue;
      }
      if (el.name != "document") throw ParseError(0, "unexpected <" + el.name + "> in <subcorpus>");
      Document doc;
      doc.doc_id = required_attr(el, "id");
      doc.subcorpus = path;
      if (const std::string* m = el.attribute("meta")) doc.metadata_ref = *m;
      for (const auto& child : el.children) {
        if (child.name == "meta") {
          MetadataRecord rec = read_record(child);
          if (!out.catalog.find(rec.id)) out.catalog.add(std::move(rec));
          continue;
        }
        if (child.name != "s") throw ParseError(0, "unexpected <" + child.name + "> in <document>");
        Sentence s;
        s.id = required_attr(child, "id");
        s.text = required_attr(child, "text");
        auto status = parse_status(required_attr(child, "status"));
        if (!status) throw ParseError(0, "bad status on sentence '" + s.id + "'");
        s.status = *status;
        for (const auto& w : child.children) {
          if (w.name != "w") throw ParseError(0, "unexpected <" + w.name + "> in <s>");
          Token t;
          t.surface = w.text;
          const std::string* tag = w.attribute("tag");
          if (tag) {
            auto prov = parse_provenance(required_attr(w, "prov"));
            if (!prov) throw ParseError(0, "bad provenance in sentence '" + s.id + "'");
            t.tag = tagset.assign(*tag, *prov);
          }
          s.tokens.push_back(std::move(t));
        }
        // Spans are recovered from the sentence text.
        std::size_t pos = 0;
        for (auto& t : s.tokens) {
          std::size_t at = s.text.find(t.surface, pos);
          if (at == std::string::npos)
            throw ParseError(0, "token '" + t.surface + "' not found in text of '" + s.id + "'");
          t.span = {at, at + t.surface.size()};
          pos = t.span.end;
        }
        if (!reconstructs(s.text, s.tokens))
          throw ParseError(0, "tokens of sentence '" + s.id + "' do not rebuild its text");
        doc.sentences.push_back(std::move(s));
      }
      out.corpus.documents.push_back(std::move(doc));
    }
  }
  std::sort(out.corpus.documents.begin(), out.corpus.documents.end(),
            [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
  return out;
}

}  // namespace ann
