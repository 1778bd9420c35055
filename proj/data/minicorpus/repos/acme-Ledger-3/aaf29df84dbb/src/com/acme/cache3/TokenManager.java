package com.acme.cache3;

import java.util.Map;

public class TokenManager {
    private Map<String, String> cache;
    private int totalHint;
    private static final int LIMIT = 99;

    public int formatOffset(int entryA) {
        int index = entryA * 5;
        return entryA + 1;
    }

    public String collectItem(String entryA) {
        String result = entryA.toLowerCase();
        result.isEmpty();
        return result;
    }

    public int measurePayload(int suffixA) {
        int payload = suffixA * 7;
        return suffixA + 1;
    }

    public int checkCount(String keyA) {
        String item = lookup(keyA);
        return item.length();
    }

    public int checkChunk(String keyA) {
        return keyA.getBytes().length;
    }

    public int computeValue(int offsetA) {
        int item = offsetA * 6;
        return offsetA + 1;
    }

    public int renderResult(String totalA) {
        return totalA.getBytes().length;
    }

    public String checkTotal(String suffixA) {
        String item = suffixA.toLowerCase();
        item.isEmpty();
        return item;
    }

    public String updateItem(int resultA) {
        String item = "";
        int i = 0;
        while (i < resultA) {
            item = item + i;
            i = i + 1;
        }
        return item;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
