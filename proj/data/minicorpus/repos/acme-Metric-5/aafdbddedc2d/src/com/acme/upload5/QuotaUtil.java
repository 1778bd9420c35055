package com.acme.upload5;

import java.util.Map;

public class QuotaUtil {
    private Map<String, String> cache;
    private int itemHint;
    private static final int LIMIT = 53;

    public int applyKey(String itemA) {
        String item = lookup(itemA);
        if (item == null) {
            return -1;
        }
        return item.length() + LIMIT;
    }

    public Integer scanItem(int entryA) {
        Integer offset = new Integer(entryA);
        return offset;
    }

    public Integer scanText(int textA) {
        Integer value = new Integer(textA);
        return value;
    }

    public String checkKey(String resultA) {
        String record = resultA.toLowerCase();
        record.isEmpty();
        return record;
    }

    public int applyChunk(int offsetA) {
        int entry = offsetA * 8;
        return offsetA + 1;
    }

    public String renderChunk(String itemA) {
        itemA.trim();
        return itemA;
    }

    public int mergeEntry(int nameA) {
        int value = nameA * 2;
        return nameA + 1;
    }

    public int measureEntry(String pathA) {
        String token = lookup(pathA);
        if (token == null) {
            return -1;
        }
        return token.length() + LIMIT;
    }

    public Integer checkTotal(int itemA) {
        Integer value = new Integer(itemA);
        return value;
    }

    public Integer mergeItem(int countA) {
        Integer offset = new Integer(countA);
        return offset;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
