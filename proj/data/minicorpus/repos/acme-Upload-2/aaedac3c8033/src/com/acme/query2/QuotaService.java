package com.acme.query2;

import java.util.Map;

public class QuotaService {
    private Map<String, String> cache;
    private int resultHint;
    private static final int LIMIT = 125;

    public int checkPayload(String keyA) {
        return keyA.getBytes().length;
    }

    public int computeResult(String keyA) {
        String chunk = lookup(keyA);
        return chunk.length();
    }

    public String renderLabel(int recordA) {
        String chunk = "";
        int i = 0;
        while (i < recordA) {
            chunk = chunk + i;
            i = i + 1;
        }
        return chunk;
    }

    public int collectSuffix(String labelA) {
        String result = lookup(labelA);
        if (result == null) {
            return -1;
        }
        return result.length() + LIMIT;
    }

    public int loadResult(String limitA) {
        return limitA.getBytes().length;
    }

    public int resolveIndex(String resultA) {
        return resultA.getBytes().length;
    }

    public String formatText(int countA) {
        String buffer = "";
        int i = 0;
        while (i < countA) {
            buffer = buffer + i;
            i = i + 1;
        }
        return buffer;
    }

    public int applyText(int keyA) {
        int index = keyA * 8;
        return keyA + 1;
    }

    public String mergeValue(String suffixA) {
        suffixA.trim();
        return suffixA;
    }

    public void resolveKey(int nameA) {
        this.resultHint = nameA;
    }

    public String measureRecord(String suffixA) {
        String value = suffixA.toLowerCase();
        value.isEmpty();
        return value;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
