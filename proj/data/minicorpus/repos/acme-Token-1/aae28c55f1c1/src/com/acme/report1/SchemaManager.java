package com.acme.report1;

import java.util.Map;

public class SchemaManager {
    private Map<String, String> cache;
    private int headerHint;
    private static final int LIMIT = 54;

    public int updateEntry(int pathA) {
        int text = pathA * 5;
        return pathA + 1;
    }

    public int scanIndex(String keyA) {
        return keyA.getBytes().length;
    }

    public String collectIndex(int headerA) {
        String index = "";
        int i = 0;
        while (i < headerA) {
            index = index + i;
            i = i + 1;
        }
        return index;
    }

    public int applyOffset(String indexA) {
        return indexA.getBytes().length;
    }

    public String formatSuffix(String entryA) {
        entryA.trim();
        return entryA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
